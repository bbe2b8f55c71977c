#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "raal/engine.hpp"

namespace raal {

//! One algorithm configuration inside a campaign (a line in the plots).
struct CampaignVariant {
    std::string name;
    int cpus = 1;
    std::vector<int> bins_per_dim;
    double eta_xi = 0.0;
    SeedingMode seeding = SeedingMode::Auto;
};

struct Campaign {
    std::string benchmark = "forrester";
    bool multifidelity = false;
    int dims = 1;
    std::vector<CampaignVariant> variants;
    int runs = 20;
    std::uint64_t base_seed = 0;
    std::string out_dir = "out";
    double budget = 20.0;
    int max_iterations = 1000;
    int pool_size = 0;
    double xi_max = 0.8;
    double zeta = 0.0;
    int doe_low = 5;
    int doe_high = 2;
    GpConfig gp;
    bool classic_rosenbrock = false;
};

//! Per-iteration percentiles of the RSE across a campaign's runs.
struct AggregateTrace {
    std::string name;
    std::vector<double> median;
    std::vector<double> p25;
    std::vector<double> p75;

    std::size_t iterations() const { return median.size(); }
};

struct CampaignResult {
    std::vector<AggregateTrace> aggregates;        // one per variant
    std::vector<std::string> trace_files;
    std::vector<std::string> aggregate_files;
    std::string plot_file;
};

//! Root squared error |best - f(x*)|.
double compute_rse(double best_value, double true_optimum);

//! Parse a campaign from the JSON config format used by the CLI.
Campaign campaign_from_json(const std::string& json_text);
Campaign campaign_from_json_file(const std::string& path);

//! Execute every (variant, run) pair, writing one trace CSV per pair, one
//! aggregate CSV per variant and one comparison plot for the problem.
//! Run r of every variant shares seed base_seed + r (identical pool and DOE).
CampaignResult run_campaign(const Campaign& campaign);

//! Trace CSV schema: run_id,iteration,budget_spent,xi,batch_size,best_y_hf,rse
void write_trace_csv(std::ostream& os, int run_id, const RunRecord& record);

//! Aggregate with forward-filled tails (a finished run keeps its final RSE).
AggregateTrace aggregate_runs(const std::string& name,
                              const std::vector<std::vector<double>>& rse_series);

//! Self-contained SVG: log-scale RSE vs iteration, median lines and shaded
//! interquartile bands, one legend entry per aggregate.
void emit_plot(std::ostream& os, const std::vector<AggregateTrace>& aggregates);
void emit_plot_file(const std::string& path, const std::vector<AggregateTrace>& aggregates);

}  // namespace raal
