// Tests for sweep configuration, execution, emission, and recipes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cascade/sweep.hpp>
#include <cmath>
#include <sstream>
#include <string>

using namespace cascade;
using nlohmann::json;

namespace {

constexpr double pi = 3.14159265358979323846;

SweepConfig small_tls_config() {
    SweepConfig c;
    c.model = "bare-tls";
    c.fixed = {{"kappa", 1.0}, {"gamma0", 0.0}};
    c.axes = {{"omega0", 1.0, 10.0, 4, "linear"}, {"delta0", 0.5, 5.0, 3, "log"}};
    c.outputs = {"Cd", "N1", "absM"};
    return c;
}

std::string csv_of(const SweepResult& r) {
    std::ostringstream os;
    write_csv(r, os);
    return os.str();
}

}  // namespace

TEST_CASE("axis value grids: linear, log, single point") {
    AxisSpec lin{"x", 0.0, 1.0, 5, "linear"};
    auto v = lin.values();
    REQUIRE(v.size() == 5);
    CHECK(v.front() == doctest::Approx(0.0));
    CHECK(v[2] == doctest::Approx(0.5));
    CHECK(v.back() == doctest::Approx(1.0));

    AxisSpec lg{"x", 1.0, 100.0, 3, "log"};
    auto w = lg.values();
    CHECK(w[1] == doctest::Approx(10.0));

    AxisSpec one{"x", 7.0, 7.0, 1, "linear"};
    REQUIRE(one.values().size() == 1);
    CHECK(one.values()[0] == doctest::Approx(7.0));
}

TEST_CASE("config validation rejects malformed input with field names") {
    auto expect_error = [](SweepConfig c, const std::string& needle) {
        try {
            c.validate();
            FAIL("expected ConfigError mentioning " << needle);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    SweepConfig base = small_tls_config();
    base.validate();  // sanity: the base config is fine

    SweepConfig c = base;
    c.model = "tardis";
    expect_error(c, "model");

    c = base;
    c.axes.clear();
    expect_error(c, "axes");

    c = base;
    c.axes.push_back({"third", 0.0, 1.0, 2, "linear"});
    expect_error(c, "axes");

    c = base;
    c.axes[0].count = 0;
    expect_error(c, "count");

    c = base;
    c.axes[0].max = c.axes[0].min;
    expect_error(c, "degenerate");

    c = base;
    c.axes[0].scale = "quadratic";
    expect_error(c, "scale");

    c = base;
    c.axes[1].min = -1.0;
    expect_error(c, "log");

    c = base;
    c.axes[1].name = c.axes[0].name;
    expect_error(c, "duplicate");

    c = base;
    c.optimize_over = {"gamma0"};
    expect_error(c, "optimize_over");

    c = base;
    c.optimize_over = {"theta"};
    c.axes[0].name = "theta";
    expect_error(c, "theta");

    c = base;
    c.outputs.clear();
    expect_error(c, "outputs");

    c = base;
    c.outputs = {"Cd", "entropy"};
    expect_error(c, "entropy");

    c = base;
    c.n_fock = -1;
    expect_error(c, "n_fock");

    c = base;
    c.coarse_points = 2;
    expect_error(c, "coarse_points");
}

TEST_CASE("config JSON round-trip preserves every field") {
    SweepConfig c = small_tls_config();
    c.optimize_over = {"theta"};
    c.axes[0].name = "omega_tilde";  // avoid clash with optimize_over
    c.n_fock = 7;
    c.seed = 42;
    c.coarse_points = 11;

    SweepConfig d = SweepConfig::from_json(c.to_json());
    CHECK(d.model == c.model);
    CHECK(d.fixed == c.fixed);
    REQUIRE(d.axes.size() == c.axes.size());
    for (std::size_t i = 0; i < c.axes.size(); ++i) {
        CHECK(d.axes[i].name == c.axes[i].name);
        CHECK(d.axes[i].min == c.axes[i].min);
        CHECK(d.axes[i].max == c.axes[i].max);
        CHECK(d.axes[i].count == c.axes[i].count);
        CHECK(d.axes[i].scale == c.axes[i].scale);
    }
    CHECK(d.optimize_over == c.optimize_over);
    CHECK(d.outputs == c.outputs);
    CHECK(d.n_fock == c.n_fock);
    CHECK(d.seed == c.seed);
    CHECK(d.coarse_points == c.coarse_points);

    CHECK_THROWS_AS(SweepConfig::from_json(json{{"model", "bare-tls"}}), ConfigError);
}

TEST_CASE("single-point sweep matches a direct library evaluation") {
    SweepConfig c;
    c.model = "bare-tls";
    c.fixed = {{"kappa", 1.0}, {"gamma0", 0.0}, {"delta0", 2.0}};
    c.axes = {{"omega0", 3.0, 3.0, 1, "linear"}};
    c.outputs = {"Cd", "N1", "N2", "absM", "r_eff", "mu_eff"};

    SweepResult res = run_sweep(c, 1);
    REQUIRE(res.rows.size() == 1);
    const SweepRow& row = res.rows[0];
    REQUIRE(row.error.empty());
    REQUIRE(row.values.size() == 6);

    TlsParams t;
    t.delta0 = 2.0;
    t.omega0 = 3.0;
    t.kappa = 1.0;
    Liouvillian liou = bare_tls(t);
    double dq = t.omega_tilde();
    TMSParams tms = tms_from_spectra(correlation_set(liou, dq, -dq));
    EffectiveTMS eff = effective_tms(tms);

    CHECK(row.coords[0] == doctest::Approx(3.0));
    CHECK(row.values[0] == doctest::Approx(concurrence_distributable(eff)).epsilon(1e-12));
    CHECK(row.values[1] == doctest::Approx(tms.n1).epsilon(1e-12));
    CHECK(row.values[2] == doctest::Approx(tms.n2).epsilon(1e-12));
    CHECK(row.values[3] == doctest::Approx(std::abs(tms.m)).epsilon(1e-12));
    CHECK(row.values[4] == doctest::Approx(eff.r_eff).epsilon(1e-12));
    CHECK(row.values[5] == doctest::Approx(eff.mu_eff).epsilon(1e-12));
}

TEST_CASE("repeated runs emit byte-identical CSV and JSON") {
    SweepConfig c = small_tls_config();
    SweepResult a = run_sweep(c, 2);
    SweepResult b = run_sweep(c, 2);
    CHECK(csv_of(a) == csv_of(b));
    CHECK(result_to_json(a).dump() == result_to_json(b).dump());

    // Wall-clock time varies between runs but must never reach the output.
    CHECK(result_to_json(a).dump().find("wall") == std::string::npos);
}

TEST_CASE("worker count does not change the emitted bytes") {
    SweepConfig c = small_tls_config();
    SweepResult serial = run_sweep(c, 1);
    SweepResult parallel = run_sweep(c, 4);
    CHECK(csv_of(serial) == csv_of(parallel));
    CHECK(result_to_json(serial).dump() == result_to_json(parallel).dump());
}

TEST_CASE("result JSON round-trip reproduces rows") {
    SweepConfig c = small_tls_config();
    SweepResult res = run_sweep(c, 1);
    SweepResult back = result_from_json(result_to_json(res));

    CHECK(back.columns == res.columns);
    REQUIRE(back.rows.size() == res.rows.size());
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        CHECK(back.rows[i].coords == res.rows[i].coords);
        CHECK(back.rows[i].values == res.rows[i].values);
        CHECK(back.rows[i].error == res.rows[i].error);
    }
    CHECK(csv_of(back) == csv_of(res));
}

TEST_CASE("CSV layout: header, trailing error column, 12 significant digits") {
    SweepConfig c = small_tls_config();
    SweepResult res = run_sweep(c, 1);
    std::string csv = csv_of(res);

    std::istringstream is(csv);
    std::string header;
    std::getline(is, header);
    CHECK(header == "omega0,delta0,Cd,N1,absM,error");

    std::size_t lines = 0;
    std::string line;
    while (std::getline(is, line)) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 5);
        CHECK(line.back() == ',');  // error field empty on success
    }
    CHECK(lines == res.rows.size());
    CHECK(csv.find("\r") == std::string::npos);

    CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
    CHECK(format_sig(12345.6789012345) == "12345.6789012");

    // Header-only output for a result with no rows.
    SweepResult empty;
    empty.columns = {"x", "Cd"};
    CHECK(csv_of(empty) == "x,Cd,error\n");
}

TEST_CASE("failing grid points produce error rows, not aborted sweeps") {
    SweepConfig c;
    c.model = "bare-tls";
    c.fixed = {{"omega0", 3.0}, {"delta0", 1.0}};
    c.axes = {{"kappa", -1.0, 1.0, 3, "linear"}};  // kappa <= 0 is invalid
    c.outputs = {"Cd"};

    SweepResult res = run_sweep(c, 1);
    REQUIRE(res.rows.size() == 3);
    CHECK(!res.rows[0].error.empty());
    CHECK(!res.rows[1].error.empty());
    CHECK(res.rows[2].error.empty());
    CHECK(std::isnan(res.rows[0].values[0]));
    CHECK(res.rows[2].values[0] >= 0.0);

    // Error text lands in the trailing CSV field with separators sanitized.
    std::string csv = csv_of(res);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);  // header
    std::getline(is, line);
    CHECK(line.find("kappa") != std::string::npos);
    CHECK(std::count(line.begin(), line.end(), ',') == 2);

    // The same rows survive a JSON round-trip.
    SweepResult back = result_from_json(result_to_json(res));
    CHECK(back.rows[0].error == res.rows[0].error);
}

TEST_CASE("optimize_point finds the resolved-regime sweet spot") {
    std::map<std::string, double> params = {
        {"omega_tilde", 30.0}, {"g", 0.1}, {"kappa", 1.0}, {"gamma0", 0.0}};
    OptimumRecord rec = optimize_point("purcell", params, {"theta"}, {"Cd"}, 0, 41);
    CHECK(rec.x[0] == doctest::Approx(pi / 4).epsilon(0.05));
    CHECK(rec.value > 0.45);
    CHECK(rec.value < 0.55);
    CHECK(!rec.boundary);
    CHECK(rec.evaluations > 41);
}

TEST_CASE("Fock ladder converges early in the resolved regime") {
    std::map<std::string, double> params = {{"theta", pi / 4},   {"omega_tilde", 30.0},
                                            {"g", 0.1},          {"kappa", 1.0},
                                            {"gamma0", 0.0}};
    FockRecord rec = fock_convergence("full-cavity", params);
    CHECK(rec.converged);
    CHECK(rec.n_fock <= 6);
    REQUIRE(rec.ladder.size() >= 2);
    CHECK(rec.ladder[0].first == 2);

    // Decoupled cavities: the answer cannot depend on the truncation at all.
    params["g"] = 0.0;
    params["gamma0"] = 0.1;  // keep the emitter damped
    FockRecord flat = fock_convergence("full-cavity", params);
    CHECK(flat.converged);
    CHECK(flat.n_fock == 2);

    CHECK_THROWS_AS(fock_convergence("bare-tls", params), ConfigError);
}

TEST_CASE("recipes: every name validates and a small one runs") {
    const auto& names = recipe_names();
    CHECK(names.size() >= 10);
    for (const auto& n : names) CHECK_NOTHROW(recipe(n).validate());
    CHECK_THROWS_AS(recipe("fig99"), ConfigError);

    // Shrink one recipe to a smoke grid and check physical output ranges.
    SweepConfig c = recipe("fig3b");
    c.axes[0].count = 4;
    c.axes[1].count = 4;
    SweepResult res = run_sweep(c, 2);
    CHECK(res.rows.size() == 16);
    for (const auto& row : res.rows) {
        REQUIRE(row.error.empty());
        CHECK(row.values[0] >= 0.0);
        CHECK(row.values[0] <= 1.0);
    }
}
