#include "qspecht/store.hpp"

#include <stdexcept>

namespace qs {

namespace {

json coeff_json(const mpq_class& c) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
    return c.get_str();
}

RegularityClass class_from(const std::string& s) {
    for (auto c : {RegularityClass::TwoRegular, RegularityClass::TwoRestricted, RegularityClass::DoublySingular,
                   RegularityClass::Both})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown class " + s);
}

Verdict verdict_from(const std::string& s) {
    for (auto v : {Verdict::Irreducible, Verdict::IrreduciblePerConjecture, Verdict::Reducible, Verdict::Unknown})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict " + s);
}

json pairs_json(const std::vector<std::pair<int, int>>& v) {
    json a = json::array();
    for (auto [d, t] : v) a.push_back({d, t});
    return a;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(const ClassificationRecord& r) {
    json j;
    j["partition"] = r.partition.parts();
    j["n"] = r.partition.n();
    j["char"] = r.p;
    j["class"] = to_string(r.cls);
    j["verdict"] = to_string(r.verdict);
    j["witnesses"] = r.witnesses;
    j["fm"] = r.fm;
    j["fm_conjugate"] = r.fm_conjugate;
    return j;
}

ClassificationRecord record_from_json(const json& j) {
    ClassificationRecord r;
    r.partition = Partition(j.at("partition").get<std::vector<int>>());
    if (j.at("n").get<int>() != r.partition.n()) throw std::invalid_argument("record size mismatch");
    r.p = j.at("char").get<int>();
    r.cls = class_from(j.at("class").get<std::string>());
    r.verdict = verdict_from(j.at("verdict").get<std::string>());
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.fm = j.at("fm").get<bool>();
    r.fm_conjugate = j.at("fm_conjugate").get<bool>();
    return r;
}

json to_json(const Tableau& t) { return t; }

json to_json(const HomSum& s) {
    json a = json::array();
    for (const auto& [t, c] : s.terms) a.push_back({{"rows", t}, {"coeff", coeff_json(c)}});
    return a;
}

json to_json(const MainhomReport& r) {
    const auto& p = r.params;
    json j;
    j["params"] = {{"s", p.s}, {"s_prime", p.s_prime}, {"f", p.f}, {"g", p.g}};
    j["mu"] = r.mu.parts();
    j["lambda"] = r.lambda.parts();
    j["support_size"] = r.support;
    j["nonzero"] = r.support > 0;
    j["semistandard"] = r.all_semistandard;
    j["pairs_checked"] = r.kernel.total_pairs - static_cast<int>(r.kernel.skipped_by_dominance.size());
    j["pairs_total"] = r.kernel.total_pairs;
    j["pairs_skipped_by_dominance"] = pairs_json(r.kernel.skipped_by_dominance);
    j["pairs_failed"] = pairs_json(r.kernel.failed_pairs);
    j["outside_reduced_list_not_killed"] = pairs_json(r.outside_list_not_killed);
    j["relations_used"] = r.relations_used;
    j["verified"] = r.verified();
    return j;
}

json to_json(const CancellationReport& r) {
    std::map<std::string, std::pair<int, int>> by;  // name -> (checked, failed)
    json failed = json::array();
    for (const auto& c : r.checks) {
        auto& e = by[c.name];
        ++e.first;
        if (!c.holds) {
            ++e.second;
            failed.push_back({{"name", c.name}, {"d", c.d}, {"t", c.t}, {"i", c.i}, {"j", c.j}, {"a", c.a}, {"b", c.b}});
        }
    }
    json j;
    j["by_proposition"] = json::object();
    for (const auto& [k, v] : by) j["by_proposition"][k] = {{"checked", v.first}, {"failed", v.second}};
    j["failures"] = failed;
    j["skipped_not_row_standard"] = r.skipped;
    j["all_hold"] = r.all_hold();
    return j;
}

JsonlCache::JsonlCache(std::string path) : path_(std::move(path)) {}

int JsonlCache::load(MemoStore& store) {
    std::lock_guard<std::mutex> lk(mu_);
    std::ifstream in(path_);
    if (!in) return 0;
    std::string line;
    int bad = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            store.put(record_from_json(json::parse(line)));
        } catch (const std::exception& e) {
            ++bad;
            warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": skipped corrupt cache line");
        }
    }
    return bad;
}

bool JsonlCache::append(const ClassificationRecord& r) {
    std::string line = to_json(r).dump() + "\n";
    std::lock_guard<std::mutex> lk(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        warnings_.push_back("cannot open cache " + path_ + " for writing");
        return false;
    }
    out << line;
    out.flush();
    if (!out) {
        warnings_.push_back("write to cache " + path_ + " failed");
        return false;
    }
    return true;
}

}  // namespace qs
