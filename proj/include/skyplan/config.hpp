// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "skyplan/errors.hpp"

namespace skyplan {

// ---------------------------------------------------------------------------
// Unit conversions. Everything downstream of the loader is linear SI
// (W, m, Hz, rad); dB and dBm exist only at this boundary.
// ---------------------------------------------------------------------------

enum class db_kind { db, dbm };

inline double db_to_linear(double x, db_kind kind) {
    return kind == db_kind::dbm ? std::pow(10.0, (x - 30.0) / 10.0)
                                : std::pow(10.0, x / 10.0);
}

inline double dbm_to_watt(double dbm) { return db_to_linear(dbm, db_kind::dbm); }
inline double db_to_ratio(double db) { return db_to_linear(db, db_kind::db); }

// ---------------------------------------------------------------------------
// Parameter records. Defaults reproduce the reference urban scenario.
// ---------------------------------------------------------------------------

enum class scheme_kind { abf, hbf };
enum class elevation_mode { paper, standard };
enum class los_mode { weighted, bernoulli };
enum class tb_order_mode { paper, distinct };

struct scenario_params {
    double area_of_interest = 1000.0;  // S_tot [m^2], a disk
    double user_density = 0.05;        // lambda_u [users/m^2]
    double uav_altitude = 10.0;        // h [m]
    double uav_mass = 1.5;             // [kg]
    double hover_constant = 2.84;      // c1+c2 [(m/kg)^(1/2)]
    double gravity = 9.81;             // [m/s^2]

    double aoi_radius() const { return std::sqrt(area_of_interest / std::numbers::pi); }
};

struct channel_params {
    double s_curve_p = 9.6117;
    double s_curve_q = 0.1581;
    double unit_gain_los = std::pow(10.0, -6.14);
    double unit_gain_nlos = std::pow(10.0, -7.2);
    double ple_los = 2.0;
    double ple_nlos = 2.92;
    int shape_los = 3;      // Nakagami m_L (integer by construction)
    int shape_nlos = 2;     // m_N
    double spread_los = 1.0;   // Omega_L
    double spread_nlos = 1.0;  // Omega_N
    elevation_mode elevation = elevation_mode::paper;
};

struct antenna_config {
    int n_x = 9;
    int n_y = 9;
    double spacing_ratio = 0.25;  // d / wavelength
    double carrier_freq = 28e9;   // [Hz]
};

struct radio_config {
    double tx_power = dbm_to_watt(20.0);       // P_t [W]
    double bandwidth = 1e9;                    // B [Hz]
    double noise_power = dbm_to_watt(-84.0);   // sigma^2 [W]
    double noise_figure = db_to_ratio(5.0);    // NF, linear
    int n_rf = 1;                              // RF chains
    int n_beams = 1;                           // N_D, simultaneous beams
    int dac_bits = 6;
    double dac_sampling = 1e9;  // F_S [Hz]
    double pa_efficiency = 0.27;
    double p_ps = 21.6e-3;     // phase shifter [W]
    double p_sp = 19.5e-3;     // splitter
    double p_c = 19.5e-3;      // combiner
    double p_m = 16.8e-3;      // mixer
    double p_lo = 22.5e-3;     // local oscillator
    double p_lpf = 14e-3;      // low pass filter
    double p_h = 3e-3;         // 90-degree hybrid coupler with buffer
    double p_bbamp = 5e-3;     // base-band amplifier
};

struct propulsion_params {
    double k1 = 0.0;
    double k2 = 1.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double c5 = 0.0;
    double c6 = 0.0;
    double angle_of_attack = 0.0;  // [rad]
};

/// Aggregate of everything the loader produces. Immutable after load by
/// convention: pass around by const reference, copy when a sweep point
/// needs an override.
struct config {
    scenario_params scenario;
    channel_params channel;
    antenna_config antenna;
    radio_config radio;
    propulsion_params propulsion;
    los_mode mc_los = los_mode::weighted;
    tb_order_mode mc_tb_orders = tb_order_mode::paper;
};

// ---------------------------------------------------------------------------
// Invariant checks. Errors name the offending key and the violated bound.
// ---------------------------------------------------------------------------

namespace detail {
inline void require(bool ok, const std::string& msg) {
    if (!ok) throw config_error(msg);
}
}  // namespace detail

inline void validate(const config& c) {
    using detail::require;
    const auto& s = c.scenario;
    require(s.area_of_interest > 0, "area_of_interest must be > 0");
    require(s.user_density > 0, "user_density must be > 0");
    require(s.uav_altitude > 0, "uav_altitude must be > 0");
    require(s.uav_mass > 0, "uav_mass must be > 0");
    require(s.hover_constant > 0, "hover_constant must be > 0");
    require(s.gravity > 0, "gravity must be > 0");

    const auto& ch = c.channel;
    require(ch.unit_gain_los > ch.unit_gain_nlos,
            "unit_gain_los must exceed unit_gain_nlos");
    require(ch.ple_los < ch.ple_nlos, "ple_los must be below ple_nlos");
    require(ch.shape_los >= 1, "shape_los must be an integer >= 1");
    require(ch.shape_nlos >= 1, "shape_nlos must be an integer >= 1");
    require(ch.spread_los > 0, "spread_los must be > 0");
    require(ch.spread_nlos > 0, "spread_nlos must be > 0");

    const auto& a = c.antenna;
    require(a.n_x == a.n_y, "n_x must equal n_y (square arrays)");
    require(a.n_x >= 2, "n_x must be >= 2");
    require(a.spacing_ratio > 0 && a.spacing_ratio <= 0.5,
            "spacing_ratio must lie in (0, 1/2]");
    require(1.391 / (std::numbers::pi * a.spacing_ratio * a.n_x) <= 1.0,
            "spacing_ratio * n_x too small: beamwidth arccosine undefined");
    require(a.carrier_freq > 0, "carrier_freq must be > 0");

    const auto& r = c.radio;
    require(r.n_beams >= 1, "n_d must be >= 1");
    require(r.n_beams <= r.n_rf, "n_beams exceeds n_rf (need n_d <= n_rf)");
    require(r.n_rf <= a.n_x * a.n_y, "n_rf exceeds the antenna element count");
    require(r.pa_efficiency > 0 && r.pa_efficiency <= 1,
            "pa_efficiency must lie in (0, 1]");
    require(r.dac_bits >= 1, "dac_bits must be >= 1");
    require(r.tx_power >= 0, "tx_power must be >= 0");
    require(r.bandwidth >= 0, "bandwidth must be >= 0");
    require(r.noise_power > 0, "noise_power must be > 0");
    require(r.noise_figure > 0, "noise_figure must be > 0");
    require(r.dac_sampling >= 0, "dac_sampling must be >= 0");
    for (double v : {r.p_ps, r.p_sp, r.p_c, r.p_m, r.p_lo, r.p_lpf, r.p_h, r.p_bbamp})
        require(v >= 0, "component powers must be >= 0");

    const auto& p = c.propulsion;
    for (double v : {p.k1, p.k2, p.c2, p.c3, p.c4, p.c5, p.c6})
        require(v >= 0, "propulsion constants must be >= 0");
}

// ---------------------------------------------------------------------------
// Loader: flat key=value text, '#' comments, unknown keys rejected, missing
// keys filled from the defaults above. Pairs may be separated by newlines or
// commas. dB/dBm quantities accept a *_dbm / *_db spelling.
// ---------------------------------------------------------------------------

namespace detail {

struct key_table {
    std::map<std::string, std::function<void(config&, const std::string&)>> setters;

    static double parse_double(const std::string& key, const std::string& v) {
        try {
            std::size_t pos = 0;
            double x = std::stod(v, &pos);
            if (pos != v.size()) throw config_error("");
            return x;
        } catch (...) {
            throw config_error("invalid numeric value for key '" + key + "': " + v);
        }
    }
    static int parse_int(const std::string& key, const std::string& v) {
        const double x = parse_double(key, v);
        const int i = static_cast<int>(std::llround(x));
        if (x != static_cast<double>(i))
            throw config_error("key '" + key + "' requires an integer, got " + v);
        return i;
    }

    key_table() {
#define SKYPLAN_KEY_D(name, ref)                                     \
    setters[name] = [](config& c, const std::string& v) {            \
        c.ref = key_table::parse_double(name, v);                    \
    }
#define SKYPLAN_KEY_I(name, ref)                                     \
    setters[name] = [](config& c, const std::string& v) {            \
        c.ref = key_table::parse_int(name, v);                       \
    }

        SKYPLAN_KEY_D("area_of_interest", scenario.area_of_interest);
        SKYPLAN_KEY_D("user_density", scenario.user_density);
        SKYPLAN_KEY_D("uav_altitude", scenario.uav_altitude);
        SKYPLAN_KEY_D("uav_mass", scenario.uav_mass);
        SKYPLAN_KEY_D("hover_constant", scenario.hover_constant);
        SKYPLAN_KEY_D("gravity", scenario.gravity);

        SKYPLAN_KEY_D("s_curve_p", channel.s_curve_p);
        SKYPLAN_KEY_D("s_curve_q", channel.s_curve_q);
        SKYPLAN_KEY_D("unit_gain_los", channel.unit_gain_los);
        SKYPLAN_KEY_D("unit_gain_nlos", channel.unit_gain_nlos);
        SKYPLAN_KEY_D("ple_los", channel.ple_los);
        SKYPLAN_KEY_D("ple_nlos", channel.ple_nlos);
        SKYPLAN_KEY_I("shape_los", channel.shape_los);
        SKYPLAN_KEY_I("shape_nlos", channel.shape_nlos);
        SKYPLAN_KEY_D("spread_los", channel.spread_los);
        SKYPLAN_KEY_D("spread_nlos", channel.spread_nlos);

        SKYPLAN_KEY_I("n_x", antenna.n_x);
        SKYPLAN_KEY_I("n_y", antenna.n_y);
        SKYPLAN_KEY_D("spacing_ratio", antenna.spacing_ratio);
        SKYPLAN_KEY_D("carrier_freq", antenna.carrier_freq);

        SKYPLAN_KEY_D("tx_power", radio.tx_power);
        SKYPLAN_KEY_D("bandwidth", radio.bandwidth);
        SKYPLAN_KEY_D("noise_power", radio.noise_power);
        SKYPLAN_KEY_D("noise_figure", radio.noise_figure);
        SKYPLAN_KEY_I("n_rf", radio.n_rf);
        SKYPLAN_KEY_I("n_d", radio.n_beams);
        SKYPLAN_KEY_I("n_beams", radio.n_beams);
        SKYPLAN_KEY_I("dac_bits", radio.dac_bits);
        SKYPLAN_KEY_D("dac_sampling", radio.dac_sampling);
        SKYPLAN_KEY_D("pa_efficiency", radio.pa_efficiency);
        SKYPLAN_KEY_D("p_ps", radio.p_ps);
        SKYPLAN_KEY_D("p_sp", radio.p_sp);
        SKYPLAN_KEY_D("p_c", radio.p_c);
        SKYPLAN_KEY_D("p_m", radio.p_m);
        SKYPLAN_KEY_D("p_lo", radio.p_lo);
        SKYPLAN_KEY_D("p_lpf", radio.p_lpf);
        SKYPLAN_KEY_D("p_h", radio.p_h);
        SKYPLAN_KEY_D("p_bbamp", radio.p_bbamp);

        SKYPLAN_KEY_D("k1", propulsion.k1);
        SKYPLAN_KEY_D("k2", propulsion.k2);
        SKYPLAN_KEY_D("c2", propulsion.c2);
        SKYPLAN_KEY_D("c3", propulsion.c3);
        SKYPLAN_KEY_D("c4", propulsion.c4);
        SKYPLAN_KEY_D("c5", propulsion.c5);
        SKYPLAN_KEY_D("c6", propulsion.c6);
        SKYPLAN_KEY_D("angle_of_attack", propulsion.angle_of_attack);

#undef SKYPLAN_KEY_D
#undef SKYPLAN_KEY_I

        // dB / dBm spellings, converted at the boundary.
        setters["tx_power_dbm"] = [](config& c, const std::string& v) {
            c.radio.tx_power = dbm_to_watt(parse_double("tx_power_dbm", v));
        };
        setters["noise_power_dbm"] = [](config& c, const std::string& v) {
            c.radio.noise_power = dbm_to_watt(parse_double("noise_power_dbm", v));
        };
        setters["noise_figure_db"] = [](config& c, const std::string& v) {
            c.radio.noise_figure = db_to_ratio(parse_double("noise_figure_db", v));
        };

        setters["elevation_mode"] = [](config& c, const std::string& v) {
            if (v == "paper")
                c.channel.elevation = elevation_mode::paper;
            else if (v == "standard")
                c.channel.elevation = elevation_mode::standard;
            else
                throw config_error("elevation_mode must be 'paper' or 'standard'");
        };
        setters["los_mode"] = [](config& c, const std::string& v) {
            if (v == "weighted")
                c.mc_los = los_mode::weighted;
            else if (v == "bernoulli")
                c.mc_los = los_mode::bernoulli;
            else
                throw config_error("los_mode must be 'weighted' or 'bernoulli'");
        };
        setters["mc_tb_orders"] = [](config& c, const std::string& v) {
            if (v == "paper")
                c.mc_tb_orders = tb_order_mode::paper;
            else if (v == "distinct")
                c.mc_tb_orders = tb_order_mode::distinct;
            else
                throw config_error("mc_tb_orders must be 'paper' or 'distinct'");
        };
    }

    static const key_table& instance() {
        static key_table t;
        return t;
    }
};

inline std::string trim(std::string_view sv) {
    std::size_t b = sv.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    std::size_t e = sv.find_last_not_of(" \t\r");
    return std::string(sv.substr(b, e - b + 1));
}

}  // namespace detail

inline config load_config(std::string_view text) {
    config c;
    const auto& table = detail::key_table::instance();
    std::set<std::string> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        // Pairs on one line may be comma separated.
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t comma = line.find(',', start);
            std::string_view item = line.substr(
                start, comma == std::string_view::npos ? std::string_view::npos
                                                       : comma - start);
            start = comma == std::string_view::npos ? line.size() + 1 : comma + 1;

            std::string entry = detail::trim(item);
            if (entry.empty()) continue;
            std::size_t eq = entry.find('=');
            if (eq == std::string::npos)
                throw config_error("expected key=value, got: " + entry);
            std::string key = detail::trim(std::string_view(entry).substr(0, eq));
            std::string value = detail::trim(std::string_view(entry).substr(eq + 1));
            auto it = table.setters.find(key);
            if (it == table.setters.end())
                throw config_error("unknown key '" + key + "'");
            if (!seen.insert(key).second)
                throw config_error("duplicate key '" + key + "'");
            it->second(c, value);
        }
    }
    validate(c);
    return c;
}

inline config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

// ---------------------------------------------------------------------------
// Serializer. Reloading the output reproduces every field bit for bit.
// ---------------------------------------------------------------------------

namespace detail {
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace detail

inline std::string save_config(const config& c) {
    std::ostringstream out;
    auto d = [&](const char* key, double v) {
        out << key << " = " << detail::fmt_g17(v) << '\n';
    };
    auto i = [&](const char* key, int v) { out << key << " = " << v << '\n'; };

    d("area_of_interest", c.scenario.area_of_interest);
    d("user_density", c.scenario.user_density);
    d("uav_altitude", c.scenario.uav_altitude);
    d("uav_mass", c.scenario.uav_mass);
    d("hover_constant", c.scenario.hover_constant);
    d("gravity", c.scenario.gravity);
    d("s_curve_p", c.channel.s_curve_p);
    d("s_curve_q", c.channel.s_curve_q);
    d("unit_gain_los", c.channel.unit_gain_los);
    d("unit_gain_nlos", c.channel.unit_gain_nlos);
    d("ple_los", c.channel.ple_los);
    d("ple_nlos", c.channel.ple_nlos);
    i("shape_los", c.channel.shape_los);
    i("shape_nlos", c.channel.shape_nlos);
    d("spread_los", c.channel.spread_los);
    d("spread_nlos", c.channel.spread_nlos);
    out << "elevation_mode = "
        << (c.channel.elevation == elevation_mode::paper ? "paper" : "standard")
        << '\n';
    i("n_x", c.antenna.n_x);
    i("n_y", c.antenna.n_y);
    d("spacing_ratio", c.antenna.spacing_ratio);
    d("carrier_freq", c.antenna.carrier_freq);
    d("tx_power", c.radio.tx_power);
    d("bandwidth", c.radio.bandwidth);
    d("noise_power", c.radio.noise_power);
    d("noise_figure", c.radio.noise_figure);
    i("n_rf", c.radio.n_rf);
    i("n_d", c.radio.n_beams);
    i("dac_bits", c.radio.dac_bits);
    d("dac_sampling", c.radio.dac_sampling);
    d("pa_efficiency", c.radio.pa_efficiency);
    d("p_ps", c.radio.p_ps);
    d("p_sp", c.radio.p_sp);
    d("p_c", c.radio.p_c);
    d("p_m", c.radio.p_m);
    d("p_lo", c.radio.p_lo);
    d("p_lpf", c.radio.p_lpf);
    d("p_h", c.radio.p_h);
    d("p_bbamp", c.radio.p_bbamp);
    d("k1", c.propulsion.k1);
    d("k2", c.propulsion.k2);
    d("c2", c.propulsion.c2);
    d("c3", c.propulsion.c3);
    d("c4", c.propulsion.c4);
    d("c5", c.propulsion.c5);
    d("c6", c.propulsion.c6);
    d("angle_of_attack", c.propulsion.angle_of_attack);
    out << "los_mode = "
        << (c.mc_los == los_mode::weighted ? "weighted" : "bernoulli") << '\n';
    out << "mc_tb_orders = "
        << (c.mc_tb_orders == tb_order_mode::paper ? "paper" : "distinct") << '\n';
    return out.str();
}

}  // namespace skyplan
