#pragma once

#include "qspecht/criteria.hpp"
#include "qspecht/homcalc.hpp"
#include "qspecht/mainhom.hpp"

#include <json.hpp>

#include <fstream>
#include <mutex>
#include <string>
#include <vector>

namespace qs {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const ClassificationRecord& r);
ClassificationRecord record_from_json(const json& j);  // throws on malformed input
json to_json(const Tableau& t);
json to_json(const HomSum& s);
json to_json(const MainhomReport& r);
json to_json(const CancellationReport& r);

// Append-only JSONL cache of classification records.
class JsonlCache {
public:
    explicit JsonlCache(std::string path);
    // reads existing lines into the store; returns the number of corrupt lines skipped
    int load(MemoStore& store);
    // false when the write failed
    bool append(const ClassificationRecord& r);
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::string path_;
    std::mutex mu_;
    std::vector<std::string> warnings_;
};

}  // namespace qs
