#pragma once
// Verification suites for the flip compatibility of quantum trace values.
#include <string>
#include <vector>

#include "sl3qt/mutation.hpp"
#include "sl3qt/trace.hpp"

namespace sl3qt {

std::string read_file(const std::string& path);  // throws InputError

struct CheckResult {
    int criterion;  // acceptance criterion number, 0 if auxiliary
    std::string name;
    bool pass;
    std::string detail;
};

// The quadrilateral with its six webs, before and after flipping the diagonal.
struct Quadrilateral {
    Triangulation T;
    Seed s;
    FlipSequence F;
    std::vector<WebPath> webs, webs_after;
    std::string arc;
};
Quadrilateral load_quadrilateral(const std::string& data_dir);
Quadrilateral make_quadrilateral(const Triangulation& T, const std::vector<WebPath>& webs, const std::string& arc);

std::vector<StatePair> all_states();

struct TableData {
    std::vector<std::string> cols;
    std::vector<std::pair<int, int>> entry;  // (i,j) of each column
    std::vector<int> index;                  // 1-based position inside its entry
    std::vector<Exps> exps;
    std::vector<NodeId> rows;
    std::vector<i64> alpha, alpha2;
};
// Step 1': terms of the Delta-side trace with the exponents of the two F^q factors.
TableData step1_table(const Quadrilateral& Q, const WebPath& w);
std::string render_table(int case_no, const Seed& s, const TableData& t);
// nu_{v4} nu_{v3} applied to a Delta-side polynomial (normalized)
QuantumRational step1_image(const Quadrilateral& Q, const LaurentPoly& p);

// canonical renderings of all trace values of the six webs on both sides of the flip
std::string render_all_traces(const Quadrilateral& Q, RenderStyle style = RenderStyle::canonical);

struct FlipCheck {
    bool ok;
    std::string report;
};
FlipCheck flip_check(const Quadrilateral& Q, std::size_t web, StatePair st, RenderStyle style = RenderStyle::canonical);

struct SuiteOptions {
    std::string data_dir, golden_dir;
    int random_samples = 100;
    unsigned seed = 20240601u;
};
std::vector<CheckResult> verify_suite(const SuiteOptions& opt);

}  // namespace sl3qt
