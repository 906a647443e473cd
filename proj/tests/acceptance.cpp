#include "rootsys/reproduce.hpp"

#include <iostream>
#include <map>
#include <thread>

using namespace rootsys;

int main() {
    const std::map<int, std::string> titles = {
        {1, "root data"},
        {2, "marks, zero sum and affine diagrams"},
        {3, "hom counts"},
        {4, "m(Sigma) and r(Sigma)"},
        {5, "fundamental subset counts"},
        {6, "Out_Sigma orders"},
        {7, "census statistics"},
        {8, "oracle cross-validation and counting identities"},
        {9, "closure laws"},
        {10, "dual pairs"},
        {11, "determinism across worker counts"},
    };
    int jobs = std::max(2u, std::thread::hardware_concurrency());
    auto checks = reproduce({"all", jobs});
    auto again = reproduce({"all", 1});
    bool same = format_report_text(checks) == format_report_text(again);

    std::map<int, std::pair<int, int>> tally;
    std::map<int, std::vector<const Check*>> failed;
    for (auto& c : checks) {
        auto& t = tally[c.criterion];
        ++t.second;
        if (c.pass)
            ++t.first;
        else
            failed[c.criterion].push_back(&c);
    }
    bool all = true;
    for (auto& [k, title] : titles) {
        bool pass;
        std::string detail;
        if (k == 11) {
            pass = same;
            detail = "reports with --jobs " + std::to_string(jobs) + " and --jobs 1 " + (same ? "identical" : "differ");
        } else {
            auto [ok, n] = tally[k];
            pass = n > 0 && ok == n;
            detail = std::to_string(ok) + "/" + std::to_string(n) + " checks";
        }
        all &= pass;
        std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << " (" << detail << ") " << title << '\n';
        for (auto* c : failed[k])
            std::cout << "    failed: " << c->anchor << " expected " << c->expected << ", computed " << c->computed
                      << '\n';
    }
    if (tally.count(0))
        for (auto* c : failed[0]) std::cout << "    task error: " << c->anchor << ": " << c->computed << '\n';
    return all && !tally.count(0) ? 0 : 1;
}
