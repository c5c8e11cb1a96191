/*
   Copyright 2026 The tmot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tmot/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "tmot/bridge.hpp"
#include "tmot/error.hpp"
#include "tmot/field.hpp"
#include "tmot/text.hpp"
#include "tmot/verify.hpp"

namespace tmot {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ConfigParse, what); }

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) bad("unknown key '" + key + "' in " + where);
}

int get_int(const json& j, const char* key, int lo) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) bad(std::string(key) + " must be an integer");
    long long x = v.get<long long>();
    if (x < lo || x > 1000000) bad(std::string(key) + " out of range");
    return static_cast<int>(x);
}

std::string get_string(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_string()) bad(std::string(key) + " must be a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& what) {
    if (!v.is_array()) bad(what + " must be a list");
    std::vector<std::string> out;
    for (const json& e : v) {
        if (e.is_string()) out.push_back(e.get<std::string>());
        else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
        else bad(what + " entries must be strings");
    }
    return out;
}

std::vector<RationalFn> rational_list(const json& v, int q, const std::string& what) {
    std::vector<RationalFn> out;
    for (const auto& s : string_list(v, what)) out.push_back(parse_rational(s, q));
    return out;
}

SigmaModule motive_from_json(const json& j, int q, bool& drinfeld) {
    if (!j.is_object() || !j.contains("kind")) bad("motive needs a kind");
    check_keys(j, {"kind", "power", "coeffs", "sigma", "denominator", "wrappers"}, "motive");
    const std::string kind = get_string(j, "kind");
    std::optional<SigmaModule> m;
    drinfeld = false;
    if (kind == "carlitz") {
        m = carlitz_power(q, j.contains("power") ? get_int(j, "power", 0) : 1);
    } else if (kind == "trivial") {
        m = trivial_module(q);
    } else if (kind == "drinfeld") {
        if (!j.contains("coeffs")) bad("drinfeld motive needs coeffs");
        m = drinfeld_motive(q, rational_list(j.at("coeffs"), q, "coeffs"));
        drinfeld = true;
    } else if (kind == "matrix") {
        if (!j.contains("sigma") || !j.at("sigma").is_array()) bad("matrix motive needs sigma rows");
        Matrix<BiPoly> rows;
        for (const json& row : j.at("sigma")) {
            std::vector<BiPoly> r;
            for (const auto& s : string_list(row, "sigma row")) r.push_back(parse_bipoly(s, q));
            rows.push_back(std::move(r));
        }
        Poly g = j.contains("denominator") ? parse_poly(get_string(j, "denominator"), q, Var::Theta) : Poly();
        m = SigmaModule::from_matrix(q, rows, g);
    } else {
        bad("unknown motive kind '" + kind + "'");
    }
    if (j.contains("wrappers")) {
        if (!j.at("wrappers").is_array()) bad("wrappers must be a list");
        for (const json& w : j.at("wrappers")) {
            drinfeld = false;
            if (w.is_string()) {
                const std::string name = w.get<std::string>();
                if (name == "sym2") m = sym2(*m);
                else if (name == "det") m = det_module(*m);
                else if (name == "dual_twist") m = dual_twist(*m);
                else bad("unknown wrapper '" + name + "'");
            } else if (w.is_object() && w.size() == 1 && w.contains("tensor")) {
                bool unused = false;
                m = tensor(*m, motive_from_json(w.at("tensor"), q, unused));
            } else {
                bad("wrapper must be a name or {\"tensor\": motive}");
            }
        }
    }
    return *m;
}

TModule module_from_json(const json& j, int q) {
    if (!j.is_object() || !j.contains("kind")) bad("module needs a kind");
    check_keys(j, {"kind", "coeffs"}, "module");
    const std::string kind = get_string(j, "kind");
    if (kind == "carlitz") return carlitz_module(q);
    if (!j.contains("coeffs")) bad("module needs coeffs");
    if (kind == "drinfeld") return drinfeld_module(q, rational_list(j.at("coeffs"), q, "coeffs"));
    if (kind != "matrices") bad("unknown module kind '" + kind + "'");
    if (!j.at("coeffs").is_array()) bad("coeffs must be a list of matrices");
    std::vector<KMatrix> a;
    for (const json& mat : j.at("coeffs")) {
        if (!mat.is_array()) bad("coeffs must be a list of matrices");
        KMatrix k;
        for (const json& row : mat) k.push_back(rational_list(row, q, "matrix row"));
        a.push_back(std::move(k));
    }
    if (a.empty()) bad("module needs at least A_0");
    return TModule(q, std::move(a));
}

RunConfig from_json(const json& j) {
    if (!j.is_object()) bad("config must be an object");
    check_keys(j, {"q", "command", "n", "order", "precision", "mode", "max_degree", "window", "confirm", "guard",
                   "shards", "checkpoint", "motive", "module", "exclude", "points", "point"},
               "config");
    RunConfig c;
    if (!j.contains("q")) bad("missing q");
    c.q = get_int(j, "q", -1000000);
    if (c.q < 2 || c.q > kMaxPrime || !is_prime(c.q)) bad("q must be prime");
    if (!j.contains("command")) bad("missing command");
    c.command = get_string(j, "command");
    static const std::set<std::string> commands = {"zeta", "lvalue", "exp", "log", "bridge", "verify"};
    if (!commands.count(c.command)) bad("unknown command '" + c.command + "'");

    if (const char* env = std::getenv("TMOT_SHARDS")) {
        char* end = nullptr;
        long s = std::strtol(env, &end, 10);
        if (*env == '\0' || *end != '\0' || s < 1 || s > 1024) bad("TMOT_SHARDS must be a positive integer");
        c.policy.shards = static_cast<int>(s);
    }
    if (j.contains("n")) c.n = get_int(j, "n", 1);
    if (j.contains("order")) c.order = get_int(j, "order", 1);
    if (j.contains("precision")) c.policy.precision = get_int(j, "precision", 1);
    if (j.contains("mode")) c.policy.mode = parse_mode(get_string(j, "mode"));
    if (j.contains("max_degree")) c.policy.max_degree = get_int(j, "max_degree", 0);
    if (j.contains("window")) c.policy.window = get_int(j, "window", 1);
    if (j.contains("confirm")) c.policy.confirm = get_int(j, "confirm", 0);
    if (j.contains("guard")) c.policy.guard = get_int(j, "guard", 0);
    if (j.contains("shards")) c.policy.shards = get_int(j, "shards", 1);
    if (j.contains("checkpoint")) c.policy.checkpoint = get_string(j, "checkpoint");
    if (j.contains("exclude"))
        for (const auto& s : string_list(j.at("exclude"), "exclude")) c.excluded.push_back(parse_poly(s, c.q, Var::Theta));
    if (j.contains("motive")) c.motive = motive_from_json(j.at("motive"), c.q, c.drinfeld);
    if (j.contains("module")) c.module = module_from_json(j.at("module"), c.q);
    if (j.contains("points")) {
        if (!j.at("points").is_array()) bad("points must be a list of points");
        for (const json& p : j.at("points")) c.points.push_back(rational_list(p, c.q, "point"));
    }
    if (j.contains("point")) c.points.push_back(rational_list(j.at("point"), c.q, "point"));

    if ((c.command == "lvalue" || c.command == "bridge" || c.command == "verify") && !c.motive)
        bad(c.command + " needs a motive");
    if (c.command == "exp" || c.command == "log") {
        if (!c.motive && !c.module) bad(c.command + " needs a module or a motive");
        if (c.points.size() != 1) bad(c.command + " needs exactly one point");
    }
    return c;
}

class Report {
   public:
    explicit Report(bool machine) : machine_(machine) {}
    void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
    void write(std::ostream& out) const {
        for (const auto& [k, v] : lines_) out << k << (machine_ ? "=" : ": ") << v << '\n';
    }

   private:
    bool machine_;
    std::vector<std::pair<std::string, std::string>> lines_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string matrix_text(const KMatrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + m[i][j].to_string();
        s += "]";
    }
    return s + "]";
}

std::string point_text(const std::vector<RationalFn>& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? ", " : "") + z[i].to_string();
    return s + ")";
}

void add_lvalue(Report& r, const std::string& key, const LValueResult& l) {
    r.add(key, l.series.to_string());
    r.add("mode", mode_name(l.policy.mode));
    r.add("degrees", std::to_string(l.degrees_used));
    r.add("places", std::to_string(l.places));
    if (l.mu) r.add("slope_bound", std::to_string(l.mu->num) + (l.mu->den == 1 ? "" : "/" + std::to_string(l.mu->den)));
    r.add("certified", yes_no(l.certified));
}

void add_excluded(Report& r, const std::vector<Poly>& excluded) {
    for (const Poly& p : excluded) r.add("excluded", p.to_string());
}

void run_bridge(const RunConfig& c, Report& r) {
    BridgeResult b = motive_to_module(*c.motive);
    r.add("dim", std::to_string(b.module.dim()));
    r.add("tau_degree", std::to_string(b.module.degree()));
    for (int i = 0; i <= b.module.degree(); ++i) r.add("A" + std::to_string(i), matrix_text(b.module.coeff(i)));
    auto lines = b.module.action_lines();
    for (std::size_t i = 0; i < lines.size(); ++i) r.add("phi(t)_" + std::to_string(i + 1), lines[i]);
    r.add("w_dim", std::to_string(b.w.dim));
    r.add("w", matrix_text(b.w.w));
    r.add("integral", yes_no(b.integral));
    r.add("checked_places", std::to_string(b.checked_places));
    if (c.show_basis)
        for (std::size_t i = 0; i < b.basis.size(); ++i) {
            std::string s = "(";
            for (std::size_t j = 0; j < b.basis[i].size(); ++j) s += (j ? ", " : "") + b.basis[i][j].to_string();
            r.add("basis_" + std::to_string(i + 1), s + ")");
        }
}

void run_series(const RunConfig& c, Report& r) {
    TModule e = c.module ? *c.module : motive_to_module(*c.motive).module;
    const int x = c.policy.precision;
    KInfPoint z = point_from_rational(c.points[0], x + c.policy.guard);
    Evaluation ev;
    if (c.order) {
        ExpSeries ex = exp_coefficients(e, *c.order);
        ev = evaluate(c.command == "exp" ? ex : log_coefficients(ex, *c.order), z, x);
    } else {
        SeriesCache cache(e);
        ev = c.command == "exp" ? cache.exp(z, x) : cache.log(z, x);
    }
    r.add("module", e.to_string());
    r.add("point", point_text(c.points[0]));
    for (std::size_t i = 0; i < ev.value.size(); ++i)
        r.add(c.command + "_" + std::to_string(i + 1), ev.value[i].to_string());
    r.add("terms", std::to_string(ev.terms));
}

void run_verify(const RunConfig& c, Report& r) {
    const bool logalg = c.drinfeld && c.points.empty();
    LatticeReport rep = logalg ? verify_logalg(*c.motive, c.policy, c.excluded)
                               : verify_conjecture(*c.motive, c.points, c.policy, c.excluded);
    r.add("method", logalg ? "logalg" : "lattice");
    add_lvalue(r, "L", rep.l);
    add_excluded(r, c.excluded);
    r.add("dim_w", std::to_string(rep.dim_w));
    for (std::size_t i = 0; i < rep.points.size(); ++i) r.add("z" + std::to_string(i + 1), point_text(rep.points[i]));
    if (logalg) {
        r.add("y", rep.y[0].to_string());
        r.add("integral_part", rep.integral_part[0].to_string());
    } else {
        r.add("numerator", rep.numerator.to_string());
        r.add("denominator", rep.denominator.to_string());
        r.add("ratio", rep.ratio.to_string());
        r.add("constant", std::to_string(static_cast<int>(rep.constant)));
    }
    r.add("deviation", std::to_string(rep.deviation));
    r.add("precision", std::to_string(rep.precision));
    r.add("verdict", rep.verdict);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        bad(e.what());
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

int run(const RunConfig& c, std::ostream& out) {
    Report r(c.machine);
    r.add("command", c.command);
    r.add("q", std::to_string(c.q));
    try {
        if (c.command == "zeta") {
            add_lvalue(r, "zeta(" + std::to_string(c.n) + ")", l_value(trivial_module(c.q), c.n, c.policy, c.excluded));
            add_excluded(r, c.excluded);
        } else if (c.command == "lvalue") {
            add_lvalue(r, "L", l_value_of_module(*c.motive, c.policy, c.excluded));
            add_excluded(r, c.excluded);
        } else if (c.command == "bridge") {
            run_bridge(c, r);
        } else if (c.command == "exp" || c.command == "log") {
            run_series(c, r);
        } else {
            run_verify(c, r);
        }
    } catch (const Error& e) {
        r.add("error", e.what());
        r.write(out);
        return 1;
    }
    r.write(out);
    return 0;
}

}  // namespace tmot
