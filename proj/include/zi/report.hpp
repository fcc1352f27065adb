#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace zi {

using json = nlohmann::json;

// Rounds to 15 significant digits so that reports are byte-stable.
double round15(double x);
json to_json(std::complex<double> z);
json to_json(double x);

struct RunReport {
    std::string cmd;
    json params = json::object();
    json results = json::array();
    json envelopes = json::array();
    double time_ms = 0;

    void add_envelope(const std::string& name, double value);
    // time_ms is left out unless requested, which keeps repeated runs identical
    std::string dump(bool with_time = false) const;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0;

    std::string line() const;
};

struct AcceptanceOptions {
    bool fast = false;           // skip the criteria that need minutes each
    std::vector<int> only;       // empty: all
};

// Runs the numbered acceptance criteria; `on_row` sees each row as soon as it is done.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_row = {});

}  // namespace zi
