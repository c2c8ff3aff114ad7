#include "tmpart/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace tmpart {

Json to_json(const NatSet& s) { return Json(s.elements()); }

Json to_json(const RepProfile& p) {
    Json j;
    j["kind"] = to_string(p.kind);
    j["n_max"] = p.n_max;
    j["counts"] = p.counts;
    return j;
}

Json to_json(const PartitionPair& p) {
    Json j;
    j["m"] = p.m();
    j["C"] = to_json(p.c());
    j["D"] = to_json(p.d());
    return j;
}

namespace {

Json identity_json(const IdentityResult& r) {
    Json j;
    j["holds"] = r.holds;
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    return j;
}

Json intersections_json(const std::vector<Intersection>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(Json{{"m", x.m}, {"R", to_json(x.r)}});
    return arr;
}

Json violations_json(const std::vector<LemmaViolation>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(Json{{"M", x.m}, {"detail", x.detail}});
    return arr;
}

}  // namespace

Json to_json(const PairIdentityReport& r) {
    Json j;
    j["degree"] = r.degree;
    j["complement"] = identity_json(r.complement);
    j["pair_identity"] = identity_json(r.pair);
    j["ok"] = r.ok();
    return j;
}

Json to_json(const SolveOutcome& o) {
    Json j;
    j["status"] = to_string(o.status);
    j["pair"] = o.pair ? to_json(*o.pair) : Json(nullptr);
    j["fail_at"] = o.fail_at ? Json(*o.fail_at) : Json(nullptr);
    if (!o.reason.empty()) j["reason"] = o.reason;
    if (!o.trace.empty()) {
        Json t = Json::array();
        for (const auto& s : o.trace) t.push_back(Json{{"n", s.n}, {"delta", s.delta}, {"placed", s.placed}});
        j["trace"] = std::move(t);
    }
    return j;
}

Json to_json(const SearchCertificate& c) {
    Json j;
    j["m_range"] = Json::array({c.m_min, c.m_max});
    j["k"] = c.k;
    j["mode"] = to_string(c.mode);
    j["shards"] = Json{{"count", c.shard_count}, {"indices", c.shard_indices}};
    j["intersections_examined"] = c.intersections_examined;
    j["candidates_examined"] = c.candidates_examined;
    Json sols = Json::array();
    for (const auto& s : c.solutions) {
        Json e;
        e["m"] = s.m;
        e["R"] = to_json(s.r);
        e["pair"] = to_json(s.pair);
        sols.push_back(std::move(e));
    }
    j["solutions"] = std::move(sols);
    j["uniqueness_violations"] = intersections_json(c.uniqueness_violations);
    j["solver_mismatches"] = intersections_json(c.solver_mismatches);
    return j;
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["range"] = Json::array({r.range_lo, r.range_hi});
    j["hits"] = r.hits;
    j["violations"] = violations_json(r.violations);
    if (!r.boundary.empty()) j["boundary"] = violations_json(r.boundary);
    return j;
}

NatSet nat_set_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("set must be a JSON array");
    std::vector<std::uint64_t> elems;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw std::invalid_argument("set elements must be nonnegative integers");
        elems.push_back(v.get<std::uint64_t>());
    }
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i] <= elems[i - 1]) throw std::invalid_argument("set must be sorted ascending without repeats");
    return NatSet::from_elements(elems);
}

PartitionPair pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("C") || !j.contains("D"))
        throw std::invalid_argument("pair must be an object with keys m, C, D");
    if (!j["m"].is_number_integer() || j["m"].get<std::int64_t>() < 0)
        throw std::invalid_argument("m must be a nonnegative integer");
    PartitionPair p(j["m"].get<std::uint64_t>(), nat_set_from_json(j["C"]), nat_set_from_json(j["D"]));
    if (j.contains("intersection") && !(nat_set_from_json(j["intersection"]) == p.intersection()))
        throw std::invalid_argument("stated intersection does not equal C ∩ D");
    return p;
}

PartitionPair read_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return pair_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tmpart
