#pragma once

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace qsp {

enum class Status {
    Pass,
    Fail,
    ConjecturePass,
    ConjectureFail,
    PreconditionFail,
    NonUnique,
};

std::string status_name(Status s);

/* Machine-readable outcome of one exact check. */
struct Report {
    std::string check;                         // e.g. "ybe", "re"
    std::map<std::string, std::string> instance;  // family, bn, bm, kind, ...
    Status status = Status::Pass;
    std::string witness;   // first discrepancy, empty when passing
    std::vector<std::string> notes;

    bool ok() const
    {
        return status == Status::Pass || status == Status::ConjecturePass;
    }
    /* stable sort key: check name then instance fields */
    std::string key() const;
    nlohmann::json to_json() const;
};

Report make_report(std::string check,
                   std::map<std::string, std::string> instance);

/* canonical serialization of a report list (sorted by key) */
std::string reports_to_string(std::vector<Report> reports);

}  // namespace qsp
