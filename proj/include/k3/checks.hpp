// checks.hpp -- the named verification checks behind the k3verify driver:
// a shared lazily-built context, suite selection, canonical report
// rendering, and the data exporters.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3/char2.hpp"
#include "k3/fibsearch.hpp"
#include "k3/golay.hpp"
#include "k3/leech.hpp"
#include "k3/lorentz.hpp"
#include "k3/planegeom.hpp"

namespace k3::checks {

enum class Status { Pass, Fail, Warn, Info };
const char* status_name(Status s);

struct CheckReport {
    std::string id;
    Status status = Status::Fail;
    std::string expected;
    std::string actual;
    double elapsed_ms = 0.0;  // shown in text output; omitted from JSON
};

struct Options {
    int ext_degree = 3;       // field-extension scan depth: 1=F4, 2=+F16, 3=+F64
    int jobs = 1;
    std::string cache_dir;    // minimal-vector cache location; empty disables
};

// Shared state built on demand and reused across checks.
class Context {
public:
    explicit Context(Options opt) : opt_(std::move(opt)) {}
    const Options& options() const { return opt_; }

    const golay::GolayCode& code();
    const leech::Basis& basis();
    const leech::MinVecs& minvecs();
    const lorentz::Embedding& embedding();
    const lorentz::RootSets& roots();
    const Graph& root_graph();
    const lorentz::WeylProjection& weyl();
    const lorentz::LVec& class_l_vec();
    const lorentz::Complement& complement();

private:
    Options opt_;
    std::optional<golay::GolayCode> code_;
    std::optional<leech::Basis> basis_;
    std::optional<leech::MinVecs> minvecs_;
    std::optional<lorentz::Embedding> emb_;
    std::optional<lorentz::RootSets> roots_;
    std::optional<Graph> graph_;
    std::optional<lorentz::WeylProjection> weyl_;
    std::optional<lorentz::LVec> class_l_;
    std::optional<lorentz::Complement> complement_;
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite(const std::string& name);

// Runs every check of the suite in registration order.
std::vector<CheckReport> run_suite(const std::string& suite, const Options& opt);

std::string render_json(const std::vector<CheckReport>& reports);  // canonical
std::string render_text(const std::vector<CheckReport>& reports);
int exit_code(const std::vector<CheckReport>& reports);  // 1 iff any Fail

const std::vector<std::string>& export_kinds();
// Writes one export; format is "json", "csv" or "bin" where supported.
// Returns false on an unsupported kind/format combination or io failure.
bool export_data(const std::string& kind, const std::string& format,
                 const std::string& path, const Options& opt, std::string* error);

}  // namespace k3::checks
