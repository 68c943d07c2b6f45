#pragma once

// JSON payloads: representations, augmentations and rank witnesses.
//
//   rep:     {"k": 2, "graded": false, "values": {"a": ["10", "01"], ...}}
//   aug:     {"graded": true, "values": {"a": 1, "b": 0}}
//   witness: {"generators": ["x", "y"], "relations": ["xy+1"], "m": 2, "n": 1,
//             "A": [["x"], ["p(1+yx)"]], "B": [["y", "(1+yx)q"]]}
//
// Generators missing from "values" are 0.

#include <string>
#include <string_view>
#include <vector>

#include "lch/charalg.hpp"
#include "lch/dga.hpp"
#include "lch/reps.hpp"

namespace lch {

std::string rep_to_json(const Algebra& alg, const MatrixRep& rho);
MatrixRep rep_from_json(const Algebra& alg, std::string_view text);

std::string aug_to_json(const Algebra& alg, const Augmentation& eps);
Augmentation aug_from_json(const Algebra& alg, std::string_view text);

// "rep" or "aug" from the presence of "k".
std::string payload_kind(std::string_view text);

struct WitnessPayload {
    Algebra alg;
    std::vector<Poly> relations;
    RankWitness witness;
};

WitnessPayload witness_from_json(std::string_view text);
std::string witness_to_json(const WitnessPayload& w);

}  // namespace lch
