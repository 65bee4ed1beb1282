#include "qsp/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace qsp {

std::string status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ConjecturePass: return "CONJECTURE-PASS";
    case Status::ConjectureFail: return "CONJECTURE-FAIL";
    case Status::PreconditionFail: return "PRECONDITION-FAIL";
    case Status::NonUnique: return "NON-UNIQUE";
    }
    return "?";
}

std::string Report::key() const
{
    std::string k = check;
    for (const auto& [name, value] : instance)
        k += "|" + name + "=" + value;
    return k;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["check"] = check;
    j["instance"] = instance;
    j["status"] = status_name(status);
    if (!witness.empty())
        j["witness"] = witness;
    if (!notes.empty())
        j["notes"] = notes;
    return j;
}

Report make_report(std::string check,
                   std::map<std::string, std::string> instance)
{
    Report r;
    r.check = std::move(check);
    r.instance = std::move(instance);
    return r;
}

std::string reports_to_string(std::vector<Report> reports)
{
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.key() < b.key(); });
    nlohmann::json arr = nlohmann::json::array();
    for (const Report& r : reports)
        arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
}

}  // namespace qsp
