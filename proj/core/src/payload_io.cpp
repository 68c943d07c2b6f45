#include "lch/payload_io.hpp"

#include <json.hpp>

namespace lch {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type");
    }
}

BitMatrix matrix_from_rows(const std::vector<std::string>& rows, int k, const std::string& name) {
    if (rows.size() != static_cast<std::size_t>(k)) throw ParseError("matrix for " + name + " needs " + std::to_string(k) + " rows");
    BitMatrix m(k, k);
    for (int r = 0; r < k; ++r) {
        const auto& s = rows[r];
        if (s.size() != static_cast<std::size_t>(k)) throw ParseError("row of " + name + " has the wrong length");
        for (int c = 0; c < k; ++c) {
            if (s[c] != '0' && s[c] != '1') throw ParseError("matrix entries are 0 or 1");
            m.set(r, c, s[c] == '1');
        }
    }
    return m;
}

Letter lookup(const Algebra& alg, const std::string& name) {
    auto l = alg.find(name);
    if (!l) throw ParseError("unknown generator " + name);
    return *l;
}

}  // namespace

std::string rep_to_json(const Algebra& alg, const MatrixRep& rho) {
    json vals = json::object();
    for (std::size_t i = 0; i < rho.values.size(); ++i) {
        std::vector<std::string> rows;
        const auto& m = rho.values[i];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::string s;
            for (std::size_t c = 0; c < m.cols(); ++c) s += m.get(r, c) ? '1' : '0';
            rows.push_back(s);
        }
        vals[alg.gen(i).name] = rows;
    }
    json j{{"k", rho.k}, {"graded", rho.graded}, {"values", vals}};
    return j.dump(2);
}

MatrixRep rep_from_json(const Algebra& alg, std::string_view text) {
    auto j = parse_json(text);
    MatrixRep rho;
    rho.k = field<int>(j, "k");
    if (rho.k < 1) throw ParseError("k must be positive");
    rho.graded = j.value("graded", false);
    rho.values.assign(alg.size(), BitMatrix(rho.k, rho.k));
    auto vals = field<std::map<std::string, std::vector<std::string>>>(j, "values");
    for (const auto& [name, rows] : vals) rho.values[lookup(alg, name)] = matrix_from_rows(rows, rho.k, name);
    return rho;
}

std::string aug_to_json(const Algebra& alg, const Augmentation& eps) {
    json vals = json::object();
    for (std::size_t i = 0; i < eps.values.size(); ++i) vals[alg.gen(i).name] = static_cast<int>(eps.values[i]);
    json j{{"graded", eps.graded}, {"values", vals}};
    return j.dump(2);
}

Augmentation aug_from_json(const Algebra& alg, std::string_view text) {
    auto j = parse_json(text);
    Augmentation eps;
    eps.graded = j.value("graded", false);
    eps.values.assign(alg.size(), 0);
    for (const auto& [name, v] : field<std::map<std::string, int>>(j, "values")) {
        if (v != 0 && v != 1) throw ParseError("augmentation values are 0 or 1");
        eps.values[lookup(alg, name)] = static_cast<std::uint8_t>(v);
    }
    return eps;
}

std::string payload_kind(std::string_view text) {
    auto j = parse_json(text);
    if (!j.is_object() || !j.contains("values")) throw ParseError("payload needs \"values\"");
    return j.contains("k") ? "rep" : "aug";
}

namespace {

std::vector<std::vector<Poly>> poly_matrix(const json& j, const char* key, int rows, int cols, const Algebra& alg) {
    auto raw = field<std::vector<std::vector<std::string>>>(j, key);
    if (raw.size() != static_cast<std::size_t>(rows)) throw ParseError(std::string(key) + " has the wrong number of rows");
    std::vector<std::vector<Poly>> out;
    for (const auto& r : raw) {
        if (r.size() != static_cast<std::size_t>(cols)) throw ParseError(std::string(key) + " has the wrong number of columns");
        std::vector<Poly> row;
        for (const auto& s : r) row.push_back(parse_poly(alg, s));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

WitnessPayload witness_from_json(std::string_view text) {
    auto j = parse_json(text);
    WitnessPayload w;
    for (const auto& g : field<std::vector<std::string>>(j, "generators")) w.alg.add_generator(g, 0);
    for (const auto& r : field<std::vector<std::string>>(j, "relations")) w.relations.push_back(parse_poly(w.alg, r));
    w.witness.m = field<int>(j, "m");
    w.witness.n = field<int>(j, "n");
    if (w.witness.m < 1 || w.witness.n < 1) throw ParseError("witness shape must be positive");
    w.witness.A = poly_matrix(j, "A", w.witness.m, w.witness.n, w.alg);
    w.witness.B = poly_matrix(j, "B", w.witness.n, w.witness.m, w.alg);
    return w;
}

std::string witness_to_json(const WitnessPayload& w) {
    json j;
    std::vector<std::string> gens, rels;
    for (const auto& g : w.alg.generators()) gens.push_back(g.name);
    for (const auto& r : w.relations) rels.push_back(to_string(w.alg, r));
    auto mat = [&](const std::vector<std::vector<Poly>>& m) {
        std::vector<std::vector<std::string>> out;
        for (const auto& row : m) {
            out.emplace_back();
            for (const auto& p : row) out.back().push_back(to_string(w.alg, p));
        }
        return out;
    };
    j["generators"] = gens;
    j["relations"] = rels;
    j["m"] = w.witness.m;
    j["n"] = w.witness.n;
    j["A"] = mat(w.witness.A);
    j["B"] = mat(w.witness.B);
    return j.dump(2);
}

}  // namespace lch
