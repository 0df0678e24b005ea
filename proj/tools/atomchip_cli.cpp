// Command-line front end for the atom-chip trap analysis library.
//
// Exit codes: 0 = success, 1 = physics/domain failure during evaluation,
// 2 = configuration or usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atomchip/casimir_polder.hpp"
#include "atomchip/constants.hpp"
#include "atomchip/corrugation.hpp"
#include "atomchip/magnetostatics.hpp"
#include "atomchip/nanowire.hpp"
#include "atomchip/report.hpp"
#include "atomchip/result_table.hpp"
#include "atomchip/side_guide.hpp"
#include "atomchip/thermal_noise.hpp"
#include "atomchip/tunneling.hpp"
#include "atomchip/units.hpp"

using nlohmann::json;
using namespace atomchip;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strictly validated view of the JSON configuration: unknown keys and wrong
// types are configuration errors, not physics errors.
class Config {
  public:
    Config() : j_(json::object()) {}
    explicit Config(json j) : j_(std::move(j)) {
        if (!j_.is_object()) throw ConfigError("config root must be a JSON object");
    }

    static Config fromFile(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
        }
        return Config(std::move(j));
    }

    void allowOnly(const std::set<std::string>& keys) const {
        for (const auto& item : j_.items())
            if (!keys.count(item.key()))
                throw ConfigError("unknown config key '" + item.key() + "'");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    double num(const std::string& key, double fallback) const {
        if (!j_.contains(key)) return fallback;
        if (!j_[key].is_number())
            throw ConfigError("config key '" + key + "' must be a number");
        return j_[key].get<double>();
    }

    std::uint64_t u64(const std::string& key, std::uint64_t fallback) const {
        if (!j_.contains(key)) return fallback;
        if (!j_[key].is_number_unsigned())
            throw ConfigError("config key '" + key + "' must be a non-negative integer");
        return j_[key].get<std::uint64_t>();
    }

    int integer(const std::string& key, int fallback) const {
        if (!j_.contains(key)) return fallback;
        if (!j_[key].is_number_integer())
            throw ConfigError("config key '" + key + "' must be an integer");
        return j_[key].get<int>();
    }

    std::string str(const std::string& key, const std::string& fallback) const {
        if (!j_.contains(key)) return fallback;
        if (!j_[key].is_string())
            throw ConfigError("config key '" + key + "' must be a string");
        return j_[key].get<std::string>();
    }

    const json& raw() const { return j_; }

  private:
    json j_;
};

struct GlobalOptions {
    std::string configPath;
    std::string out;          // "" = stdout
    std::string format = "csv";
    std::uint64_t seed = 12345;
    bool seedSet = false;
    std::string scenario;
};

Config load_config(const GlobalOptions& g) {
    if (g.configPath.empty()) return Config();
    return Config::fromFile(g.configPath);
}

std::uint64_t effective_seed(const GlobalOptions& g, const Config& c) {
    if (g.seedSet) return g.seed;
    return c.u64("seed", g.seed);
}

ResultTable make_table(const std::string& tool, const json& effectiveConfig,
                       std::uint64_t seed, std::vector<std::string> columns) {
    ResultTable t;
    t.tool = tool;
    t.columns = std::move(columns);
    t.configHash = fnv1a_hex(effectiveConfig.dump());
    t.seed = seed;
    t.version = code_version();
    return t;
}

Cell lifetimeCell(double rate) {
    if (rate > 0.0) return Cell::number(1.0 / rate);
    return Cell::failure("sealed: no open channel");
}

WireMaterial parse_material(const std::string& name) {
    if (name == "gold") return WireMaterial::gold();
    if (name == "silver-gold") return WireMaterial::silverGoldAlloy();
    throw ConfigError("material must be 'gold' or 'silver-gold'");
}

CpBodies parse_bodies(const std::string& name) {
    if (name == "combined") return CpBodies::Combined;
    if (name == "wire") return CpBodies::WireOnly;
    if (name == "surface") return CpBodies::SurfaceOnly;
    throw ConfigError("bodies must be 'combined', 'wire' or 'surface'");
}

LayerStack default_stack() {
    // 2 um thermal oxide on a silicon handle.
    LayerStack s;
    s.layers = {Layer{3.9, 2e-6}, Layer{11.68, INFINITY}};
    return s;
}

LayerStack parse_stack(const Config& c) {
    if (!c.has("layers")) return default_stack();
    const json& arr = c.raw().at("layers");
    if (!arr.is_array() || arr.empty())
        throw ConfigError("'layers' must be a non-empty array (top layer first)");
    LayerStack s;
    for (const auto& item : arr) {
        if (!item.is_object()) throw ConfigError("each layer must be an object");
        for (const auto& kv : item.items())
            if (kv.key() != "epsilon" && kv.key() != "thickness")
                throw ConfigError("unknown layer key '" + kv.key() + "'");
        if (!item.contains("epsilon") || !item["epsilon"].is_number())
            throw ConfigError("each layer needs a numeric 'epsilon'");
        Layer l;
        l.epsilon = item["epsilon"].get<double>();
        if (item.contains("thickness")) {
            if (item["thickness"].is_number())
                l.thickness = item["thickness"].get<double>();
            else if (item["thickness"].is_string() &&
                     item["thickness"].get<std::string>() == "inf")
                l.thickness = INFINITY;
            else
                throw ConfigError("layer 'thickness' must be a number or \"inf\"");
        } else {
            l.thickness = INFINITY; // omitted = substrate
        }
        s.layers.push_back(l);
    }
    try {
        s.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid layer stack: ") + e.what());
    }
    return s;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

ResultTable run_barrier(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"I", "z", "B0", "energy_uK", "Pfrom", "Pto", "seed"});
    const double I = c.num("I", 1e-3);
    const double z = c.num("z", 2e-6);
    const double B0 = c.num("B0", 0.0);
    const double EuK = c.num("energy_uK", 1.0);
    const double Pfrom = c.num("Pfrom", 1e-3);
    const double Pto = c.num("Pto", 0.1);

    const json eff = {{"I", I}, {"z", z},       {"B0", B0},
                      {"energy_uK", EuK},        {"Pfrom", Pfrom},
                      {"Pto", Pto}};
    ResultTable t = make_table(
        "barrier", eff, effective_seed(g, c),
        {"I_A", "z_m", "z_um", "peak_J", "peak_uK", "transmission",
         "deltaI_over_I"});

    const AtomSpecies atom = AtomSpecies::rb87();
    const CrossingWireBarrier b = x_wire_barrier(atom, I, z, B0);
    const double E = units::microkelvin_to_joule(EuK);
    auto V = [&](double x) { return b.excess(x); };
    const WkbResult w = wkb_probability(V, E, atom.mass, -12.0 * z, 12.0 * z);
    const double sens = current_sensitivity(atom, z, E, Pfrom, Pto);

    t.addRow({Cell::number(I), Cell::number(z), Cell::number(z * 1e6),
              Cell::number(b.peak()),
              Cell::number(units::joule_to_microkelvin(b.peak())),
              Cell::number(w.probability), Cell::number(sens)});
    return t;
}

ResultTable run_resolution(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"I", "lambda", "eta", "dyCenter", "seed"});
    const double I = c.num("I", 0.5e-3);
    const double lambda = c.num("lambda", 1e-6);
    const double eta = c.num("eta", 2.0);
    const double dy = c.num("dyCenter", 50e-9);

    const json eff = {{"I", I}, {"lambda", lambda}, {"eta", eta}, {"dyCenter", dy}};
    ResultTable t = make_table("resolution", eff, effective_seed(g, c),
                               {"I_A", "I_mA", "lambda_um", "height_m", "height_um"});

    const AtomSpecies atom = AtomSpecies::rb87();
    const double d = resolution_height(atom, I, lambda, eta, dy);
    t.addRow({Cell::number(I), Cell::number(I * 1e3), Cell::number(lambda * 1e6),
              Cell::number(d), Cell::number(d * 1e6)});
    return t;
}

ResultTable run_corrugation(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"rms", "lambdaLo", "lambdaHi", "alpha", "L", "lambdaMin", "I",
                 "z", "window", "samples", "seed"});
    const double rms = c.num("rms", 2e-9);
    const double lambdaLo = c.num("lambdaLo", 100e-9);
    const double lambdaHi = c.num("lambdaHi", 800e-9);
    const double alpha = c.num("alpha", 0.0);
    const double L = c.num("L", 1e-3);
    const double lambdaMin = c.num("lambdaMin", 50e-9);
    const double I = c.num("I", 1e-3);
    const double z = c.num("z", 1e-6);
    const double window = c.num("window", 200e-6);
    const int samples = c.integer("samples", 4096);
    const std::uint64_t seed = effective_seed(g, c);

    const json eff = {{"rms", rms},   {"lambdaLo", lambdaLo},
                      {"lambdaHi", lambdaHi}, {"alpha", alpha},
                      {"L", L},       {"lambdaMin", lambdaMin},
                      {"I", I},       {"z", z},
                      {"window", window},     {"samples", samples},
                      {"seed", seed}};
    ResultTable t = make_table(
        "corrugation", eff, seed,
        {"z_m", "z_um", "dB_over_B_analytic", "dB_over_B_realized",
         "dB_rms_T", "far_field_warning"});

    const RoughnessModel rough =
        synth_roughness(rms, lambdaLo, lambdaHi, alpha, L, lambdaMin, seed);
    const CorrugationRms analytic = corrugation_rms(rough, z);
    const double bRms = delta_b_realized_rms(rough, I, z, 0.0, window, samples);
    const double meanB = constants::mu0 * I / (2.0 * constants::pi * z);

    t.addRow({Cell::number(z), Cell::number(z * 1e6), Cell::number(analytic.ratio),
              Cell::number(bRms / meanB), Cell::number(bRms),
              Cell::number(analytic.farFieldWarning ? 1.0 : 0.0)});
    return t;
}

ResultTable run_noise(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"w", "h", "d", "T", "material", "conductivityRatio", "B0", "seed"});
    const double w = c.num("w", 1e-6);
    const double h = c.num("h", 1e-6);
    const double d = c.num("d", 1e-6);
    const double T = c.num("T", 300.0);
    const std::string materialName = c.str("material", "gold");
    const double ratio = c.num("conductivityRatio", 1.0);
    const double B0 = c.num("B0", 2e-5);

    const json eff = {{"w", w}, {"h", h}, {"d", d}, {"T", T},
                      {"material", materialName},
                      {"conductivityRatio", ratio}, {"B0", B0}};
    ResultTable t = make_table(
        "noise", eff, effective_seed(g, c),
        {"d_m", "d_um", "gamma_flip_per_s", "tau_flip_s", "tau_flip_ms",
         "gamma_dec_per_s", "coherence_s", "suppression", "quasi_static_ok"});

    const WireMaterial material = parse_material(materialName);
    const double rho = bloch_gruneisen_resistivity(material, T);
    const double sigma0 = 1.0 / rho;
    ConductivityTensor sigma{sigma0, sigma0 / ratio, sigma0 / ratio, T};

    const SourceBox box = SourceBox::wireBelow(w, h, d);
    const GeometryFactors X = geometry_factors({0, 0, 0}, {0, 0, 0}, box);
    const NoiseSpectrum S = power_spectrum(sigma, X);

    const AtomSpecies atom = AtomSpecies::rb87();
    const double gFlip = spin_flip_rate(atom.muA(), S);
    const double gDec = spin_decoherence_rate(std::abs(atom.gF) * constants::muB, S);
    const double omegaL = std::abs(atom.gF) * constants::muB * B0 / constants::hbar;

    t.addRow({Cell::number(d), Cell::number(d * 1e6), Cell::number(gFlip),
              lifetimeCell(gFlip),
              gFlip > 0.0 ? Cell::number(1e3 / gFlip)
                          : Cell::failure("sealed: no open channel"),
              Cell::number(gDec),
              lifetimeCell(gDec), Cell::number(suppression_ratio(sigma, X)),
              Cell::number(quasi_static_ok(sigma0, omegaL, d, h) ? 1.0 : 0.0)});
    return t;
}

ResultTable run_cp(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"layers", "wireHeight", "z", "bodies", "seed"});
    const double wireHeight = c.num("wireHeight", 50e-9);
    const double z = c.num("z", 200e-9);
    const std::string bodiesName = c.str("bodies", "combined");

    const LayerStack stack = parse_stack(c);
    json layersJson = json::array();
    for (const auto& l : stack.layers)
        layersJson.push_back({{"epsilon", l.epsilon},
                              {"thickness", std::isinf(l.thickness)
                                                ? json("inf")
                                                : json(l.thickness)}});
    const json eff = {{"layers", layersJson},
                      {"wireHeight", wireHeight},
                      {"z", z},
                      {"bodies", bodiesName}};
    ResultTable t = make_table("cp", eff, effective_seed(g, c),
                               {"z_m", "z_nm", "U_J", "U_uK", "strength",
                                "short_range"});

    const CpBodies bodies = parse_bodies(bodiesName);
    const AtomSpecies atom = AtomSpecies::rb87();
    const CpPotential u = combined_cp(atom, stack, wireHeight, z, bodies);
    t.addRow({Cell::number(z), Cell::number(z * 1e9), Cell::number(u.U),
              Cell::number(units::joule_to_microkelvin(u.U)),
              Cell::number(u.strength),
              Cell::number(u.shortRange ? 1.0 : 0.0)});
    return t;
}

SurfaceTunnelingResult lifetime_at(const AtomSpecies& atom, double w, double h,
                                   const LayerStack& stack, double I, double d,
                                   double B0, double omegaXFactor, double N,
                                   CpBodies bodies, double cpScale,
                                   int ySamples) {
    SideGuideSystem sys;
    sys.atom = atom;
    sys.wire = WireGeometry{w, h, 1e-3};
    sys.stack = stack;
    sys.I = I;
    sys.d = d;
    sys.B0 = B0;
    sys.omegaXFactor = omegaXFactor;
    sys.N = N;
    SurfaceTunnelingOptions o;
    o.bodies = bodies;
    o.cpScale = cpScale;
    o.ySamples = ySamples;
    return surface_tunneling_rate(sys, o);
}

ResultTable run_lifetime(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"w", "h", "layers", "I", "d", "B0", "omegaXFactor", "N",
                 "bodies", "cpScale", "ySamples", "seed"});
    const double w = c.num("w", 50e-9);
    const double h = c.num("h", 50e-9);
    const double I = c.num("I", 40e-6);
    const double d = c.num("d", 0.8e-6);
    const double B0 = c.num("B0", 5e-6);
    const double omegaXFactor = c.num("omegaXFactor", 0.1);
    const double N = c.num("N", 1000.0);
    const std::string bodiesName = c.str("bodies", "combined");
    const double cpScale = c.num("cpScale", 1.0);
    const int ySamples = c.integer("ySamples", 81);
    const LayerStack stack = parse_stack(c);

    const json eff = {{"w", w},   {"h", h},   {"I", I},
                      {"d", d},   {"B0", B0}, {"omegaXFactor", omegaXFactor},
                      {"N", N},   {"bodies", bodiesName},
                      {"cpScale", cpScale},   {"ySamples", ySamples}};
    ResultTable t = make_table(
        "lifetime", eff, effective_seed(g, c),
        {"d_m", "d_um", "rate_per_s", "lifetime_s", "barrier_free",
         "open_columns", "columns"});

    const SurfaceTunnelingResult r =
        lifetime_at(AtomSpecies::rb87(), w, h, stack, I, d, B0, omegaXFactor, N,
                    parse_bodies(bodiesName), cpScale, ySamples);
    t.addRow({Cell::number(d), Cell::number(d * 1e6), Cell::number(r.rate),
              lifetimeCell(r.rate), Cell::number(r.anyBarrierFree ? 1.0 : 0.0),
              Cell::number(r.openColumns), Cell::number(r.columns)});
    return t;
}

ResultTable run_nanowire(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"w", "h", "bulkRho", "mfp", "specular", "jCal", "sRef", "seed"});
    const double w = c.num("w", 50e-9);
    const double h = c.num("h", 50e-9);
    SafeCurrentParams params;
    params.fs.bulkRho = c.num("bulkRho", params.fs.bulkRho);
    params.fs.mfp = c.num("mfp", params.fs.mfp);
    params.fs.p = c.num("specular", params.fs.p);
    params.jCal = c.num("jCal", params.jCal);
    params.sRef = c.num("sRef", params.sRef);

    const json eff = {{"w", w},     {"h", h},
                      {"bulkRho", params.fs.bulkRho},
                      {"mfp", params.fs.mfp},
                      {"specular", params.fs.p},
                      {"jCal", params.jCal},
                      {"sRef", params.sRef}};
    ResultTable t = make_table(
        "nanowire", eff, effective_seed(g, c),
        {"w_m", "h_m", "size_nm", "rho_ratio", "Imax_A", "Imax_mA",
         "gradient_at_Imax_T_per_m"});

    const double rho = fs_resistivity(w, h, params.fs);
    const double imax = max_safe_current(w, h, params);
    const double size = std::sqrt(w * h);
    const CurrentDensityScaling scaling =
        current_density_scaling_check(size, params.jCal, params);
    t.addRow({Cell::number(w), Cell::number(h), Cell::number(size * 1e9),
              Cell::number(rho / params.fs.bulkRho), Cell::number(imax),
              Cell::number(imax * 1e3), Cell::number(scaling.gradientAtMaxI)});
    return t;
}

DesignInput report_input_from_config(const Config& c, const GlobalOptions& g) {
    DesignInput in;
    in.wire = WireGeometry{c.num("w", 25e-9), c.num("h", 25e-9), 1e-4};
    in.material = parse_material(c.str("material", "gold"));
    in.temperature = c.num("T", 300.0);
    in.d = c.num("d", 0.75e-6);
    in.B0 = c.num("B0", 2e-5);
    in.gateTime = c.num("gateTime", 1e-3);
    in.conductivityRatio = c.num("conductivityRatio", 1.0);
    in.tunnelLifetime = c.num("tunnelLifetime", INFINITY);
    const double rms = c.num("roughnessRms", 2e-9);
    if (rms > 0.0)
        in.roughness = synth_roughness(rms, c.num("roughnessLambdaLo", 100e-9),
                                       c.num("roughnessLambdaHi", 800e-9),
                                       c.num("roughnessAlpha", 0.0),
                                       c.num("roughnessL", 1e-3),
                                       c.num("roughnessLambdaMin", 50e-9),
                                       effective_seed(g, c));
    return in;
}

void add_report_row(ResultTable& t, const DesignInput& in, const DesignReport& rep) {
    const double verdictNum = rep.verdict == Verdict::Pass
                                  ? 1.0
                                  : (rep.verdict == Verdict::Fail ? 0.0 : -1.0);
    t.addRow({Cell::number(std::sqrt(in.wire.w * in.wire.h) * 1e9),
              Cell::number(in.d * 1e6), Cell::number(rep.spinFlipRate),
              lifetimeCell(rep.spinFlipRate), lifetimeCell(rep.decoherenceRate),
              Cell::number(rep.gateOps), Cell::number(rep.fieldRoughness),
              Cell::number(rep.quasiStaticValid ? 1.0 : 0.0),
              Cell::number(rep.roughnessValid ? 1.0 : 0.0),
              Cell::number(verdictNum)});
}

const std::vector<std::string> kReportColumns = {
    "size_nm",       "d_um",          "gamma_flip_per_s", "tau_flip_s",
    "coherence_s",   "gate_ops",      "dB_over_B",        "quasi_static_ok",
    "roughness_ok",  "verdict"};

ResultTable run_report(const GlobalOptions& g) {
    const Config c = load_config(g);
    c.allowOnly({"w", "h", "material", "T", "d", "B0", "gateTime",
                 "conductivityRatio", "tunnelLifetime", "roughnessRms",
                 "roughnessLambdaLo", "roughnessLambdaHi", "roughnessAlpha",
                 "roughnessL", "roughnessLambdaMin", "minGateOps",
                 "maxFieldRoughness", "seed"});
    const DesignInput in = report_input_from_config(c, g);
    DesignThresholds th;
    th.minGateOps = c.num("minGateOps", th.minGateOps);
    th.maxFieldRoughness = c.num("maxFieldRoughness", th.maxFieldRoughness);

    const json eff = {{"w", in.wire.w},
                      {"h", in.wire.h},
                      {"T", in.temperature},
                      {"d", in.d},
                      {"B0", in.B0},
                      {"gateTime", in.gateTime},
                      {"conductivityRatio", in.conductivityRatio},
                      {"minGateOps", th.minGateOps},
                      {"maxFieldRoughness", th.maxFieldRoughness}};
    ResultTable t = make_table("report", eff, effective_seed(g, c), kReportColumns);
    add_report_row(t, in, design_report(in, th));
    return t;
}

// ---------------------------------------------------------------------------
// Canned scenarios
// ---------------------------------------------------------------------------

ResultTable scenario_fig3(const GlobalOptions& g) {
    const json eff = {{"scenario", "fig3"}};
    ResultTable t = make_table("sweep", eff, g.seed,
                               {"z_m", "z_um", "deltaI_over_I"});
    const AtomSpecies atom = AtomSpecies::rb87();
    const double E = units::microkelvin_to_joule(1.0);
    for (double zum : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double z = zum * 1e-6;
        t.addRow({Cell::number(z), Cell::number(zum),
                  Cell::number(current_sensitivity(atom, z, E))});
    }
    return t;
}

ResultTable scenario_fig4(const GlobalOptions& g) {
    const json eff = {{"scenario", "fig4"}};
    ResultTable t = make_table("sweep", eff, g.seed,
                               {"I_A", "I_mA", "height_m", "height_um"});
    const AtomSpecies atom = AtomSpecies::rb87();
    // 0.05 mA to 50 mA, four points per decade.
    for (int i = 0; i <= 12; ++i) {
        const double I = 0.05e-3 * std::pow(10.0, i / 4.0);
        const double d = resolution_height(atom, I, 1e-6, 2.0, 50e-9);
        t.addRow({Cell::number(I), Cell::number(I * 1e3), Cell::number(d),
                  Cell::number(d * 1e6)});
    }
    return t;
}

ResultTable scenario_fig5(const GlobalOptions& g) {
    const json eff = {{"scenario", "fig5"}, {"seed", g.seed}};
    ResultTable t = make_table(
        "sweep", eff, g.seed,
        {"z_m", "z_um", "dB_over_B_white", "dB_over_B_pink"});
    const RoughnessModel white =
        synth_roughness(2e-9, 100e-9, 800e-9, 0.0, 1e-3, 50e-9, g.seed);
    const RoughnessModel pink =
        synth_roughness(2e-9, 100e-9, 800e-9, 1.0, 1e-3, 50e-9, g.seed);
    for (double zum : {0.5, 0.6, 0.8, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0}) {
        const double z = zum * 1e-6;
        t.addRow({Cell::number(z), Cell::number(zum),
                  Cell::number(corrugation_rms(white, z).ratio),
                  Cell::number(corrugation_rms(pink, z).ratio)});
    }
    return t;
}

ResultTable scenario_fig7(const GlobalOptions& g) {
    const json eff = {{"scenario", "fig7"}};
    ResultTable t = make_table(
        "sweep", eff, g.seed,
        {"sigma_ratio", "suppression_layered", "suppression_quasi1d",
         "layered_limit"});
    // Geometry fixed: broad thin wire probed from 5 um.
    const SourceBox box = SourceBox::wireBelow(10e-6, 2.15e-6, 5e-6);
    const GeometryFactors X = geometry_factors({0, 0, 0}, {0, 0, 0}, box);
    const double sigma0 = 4.52e7;
    const double limit = 1.0 / (1.0 + X.yy / X.zz);
    for (int i = 0; i <= 12; ++i) {
        const double r = std::pow(10.0, i / 3.0);
        // Layered conductor: stacking planes kill the vertical conduction.
        const ConductivityTensor layered{sigma0, sigma0, sigma0 / r, 300.0};
        // Quasi-1D conductor: only the axial direction conducts well.
        const ConductivityTensor quasi1d{sigma0, sigma0 / r, sigma0 / r, 300.0};
        t.addRow({Cell::number(r), Cell::number(suppression_ratio(layered, X)),
                  Cell::number(suppression_ratio(quasi1d, X)),
                  Cell::number(limit)});
    }
    return t;
}

ResultTable scenario_fig12(const GlobalOptions& g) {
    const json eff = {{"scenario", "fig12"}};
    ResultTable t = make_table(
        "sweep", eff, g.seed,
        {"d_m", "d_um", "tau_combined_s", "tau_wire_only_s",
         "tau_surface_only_s"});
    const AtomSpecies atom = AtomSpecies::rb87();
    const LayerStack stack = default_stack();
    const double I = 40e-6, B0 = 5e-6;
    for (int i = 0; i <= 12; ++i) {
        const double d = (0.3 + 0.1 * i) * 1e-6;
        std::vector<Cell> row = {Cell::number(d), Cell::number(d * 1e6)};
        for (CpBodies bodies :
             {CpBodies::Combined, CpBodies::WireOnly, CpBodies::SurfaceOnly}) {
            const SurfaceTunnelingResult r = lifetime_at(
                atom, 50e-9, 50e-9, stack, I, d, B0, 0.1, 1000.0, bodies, 1.0, 81);
            row.push_back(lifetimeCell(r.rate));
        }
        t.addRow(row);
    }
    return t;
}

ResultTable scenario_fig13(const GlobalOptions& g) {
    const json eff = {{"scenario", "fig13"}};
    ResultTable t = make_table(
        "sweep", eff, g.seed,
        {"d_m", "d_um", "tau_25nm_s", "tau_50nm_s", "tau_100nm_s",
         "tau_200nm_s"});
    const AtomSpecies atom = AtomSpecies::rb87();
    const double sigma0 = 1.0 / bloch_gruneisen_resistivity(WireMaterial::gold(), 300.0);
    const ConductivityTensor sigma = ConductivityTensor::isotropic(sigma0, 300.0);
    for (int i = 0; i <= 18; ++i) {
        const double d = (0.3 + 0.15 * i) * 1e-6;
        std::vector<Cell> row = {Cell::number(d), Cell::number(d * 1e6)};
        for (double s : {25e-9, 50e-9, 100e-9, 200e-9}) {
            const SourceBox box = SourceBox::wireBelow(s, s, d);
            const GeometryFactors X = geometry_factors({0, 0, 0}, {0, 0, 0}, box);
            const NoiseSpectrum S = power_spectrum(sigma, X);
            row.push_back(lifetimeCell(spin_flip_rate(atom.muA(), S)));
        }
        t.addRow(row);
    }
    return t;
}

ResultTable scenario_conclusion(const GlobalOptions& g) {
    const json eff = {{"scenario", "conclusion"}, {"seed", g.seed}};
    ResultTable t = make_table("sweep", eff, g.seed, kReportColumns);

    // Candidate register: a 25 nm gold wire driven at its safe current,
    // atoms 0.75 um above it, 1 ms gates.
    DesignInput design;
    design.wire = WireGeometry{25e-9, 25e-9, 1e-4};
    design.material = WireMaterial::gold();
    design.temperature = 300.0;
    design.d = 0.75e-6;
    design.B0 = 2e-5;
    design.gateTime = 1e-3;
    design.roughness = synth_roughness(2e-9, 100e-9, 800e-9, 0.0, 1e-3, 50e-9, g.seed);
    add_report_row(t, design, design_report(design));

    // Conventional comparison point: a 10 um wire probed from 1 um.
    DesignInput wide = design;
    wide.wire = WireGeometry{10e-6, 10e-6, 1e-3};
    wide.d = 1e-6;
    add_report_row(t, wide, design_report(wide));
    return t;
}

ResultTable run_sweep(const GlobalOptions& g) {
    if (g.scenario.empty())
        throw ConfigError("sweep requires --scenario "
                          "(fig3|fig4|fig5|fig7|fig12|fig13|conclusion)");
    if (g.scenario == "fig3") return scenario_fig3(g);
    if (g.scenario == "fig4") return scenario_fig4(g);
    if (g.scenario == "fig5") return scenario_fig5(g);
    if (g.scenario == "fig7") return scenario_fig7(g);
    if (g.scenario == "fig12") return scenario_fig12(g);
    if (g.scenario == "fig13") return scenario_fig13(g);
    if (g.scenario == "conclusion") return scenario_conclusion(g);
    throw ConfigError("unknown scenario '" + g.scenario + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atom-chip trap analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.configPath, "JSON configuration file");
    app.add_option("--out", g.out, "output path (default: stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* seedOpt = app.add_option("--seed", g.seed, "random seed override");
    app.add_option("--scenario", g.scenario, "canned scenario for 'sweep'");

    ResultTable (*runner)(const GlobalOptions&) = nullptr;
    const std::pair<const char*, ResultTable (*)(const GlobalOptions&)> subs[] = {
        {"barrier", run_barrier},       {"resolution", run_resolution},
        {"corrugation", run_corrugation}, {"noise", run_noise},
        {"cp", run_cp},                 {"lifetime", run_lifetime},
        {"nanowire", run_nanowire},     {"report", run_report},
        {"sweep", run_sweep}};
    for (const auto& [name, fn] : subs) {
        auto* sub = app.add_subcommand(name);
        sub->callback([&runner, fn = fn]() { runner = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g.seedSet = seedOpt->count() > 0;

    try {
        const ResultTable t = runner(g);
        t.write(g.out, g.format);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
