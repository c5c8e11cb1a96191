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

#include "tmot/lseries.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tmot/error.hpp"

namespace tmot {

std::string mode_name(PrecisionMode m) { return m == PrecisionMode::Rigorous ? "rigorous" : "empirical"; }

PrecisionMode parse_mode(const std::string& s) {
    if (s == "rigorous") return PrecisionMode::Rigorous;
    if (s == "empirical") return PrecisionMode::Empirical;
    fail(ErrorCode::ConfigParse, "unknown precision mode '" + s + "'");
}

LaurentSeries euler_factor_inverse(const EulerFactor& f, int n, int w) {
    const int r = f.degree();
    const Poly nv = place_norm(f.place);
    std::vector<Poly> powers{Poly::constant(nv.q(), Var::T, 1)};
    const Poly step = nv.pow(static_cast<unsigned long long>(n));
    for (int j = 1; j <= r; ++j) powers.push_back(powers.back() * step);
    Poly den(nv.q(), Var::T);
    for (int j = 0; j <= r; ++j) den += f.coeffs[static_cast<std::size_t>(j)] * powers[static_cast<std::size_t>(r - j)];
    return LaurentSeries::from_rational(powers[static_cast<std::size_t>(r)], den, w);
}

namespace {

// ceil(d * rate) for a positive rate.
long long ceil_mul(long long d, const Fraction& rate) {
    long long a = d * rate.num;
    return (a + rate.den - 1) / rate.den;
}

struct Checkpoint {
    std::string key;
    int degree = 0;
    std::uint64_t places = 0;
    std::string series;
    std::vector<DegreeLog> log;
};

std::string frontier_text(const std::optional<int>& f) { return f ? std::to_string(*f) : "none"; }

void write_checkpoint(const std::string& path, const Checkpoint& c) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) fail(ErrorCode::Checkpoint, "cannot write " + tmp);
        out << "format=tmot-checkpoint-1\n";
        out << "key=" << c.key << "\n";
        out << "degree=" << c.degree << "\n";
        out << "places=" << c.places << "\n";
        out << "series=" << c.series << "\n";
        for (const DegreeLog& l : c.log)
            out << "log=" << l.degree << " " << l.places << " " << frontier_text(l.frontier) << " " << l.seconds
                << "\n";
        if (!out) fail(ErrorCode::Checkpoint, "write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) fail(ErrorCode::Checkpoint, "cannot rename onto " + path);
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint c;
    std::string line;
    bool format_ok = false;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(ErrorCode::Checkpoint, "malformed line in " + path);
        const std::string k = line.substr(0, eq), v = line.substr(eq + 1);
        try {
            if (k == "format") {
                format_ok = v == "tmot-checkpoint-1";
            } else if (k == "key") {
                c.key = v;
            } else if (k == "degree") {
                c.degree = std::stoi(v);
            } else if (k == "places") {
                c.places = std::stoull(v);
            } else if (k == "series") {
                c.series = v;
            } else if (k == "log") {
                std::istringstream is(v);
                DegreeLog l;
                std::string f;
                is >> l.degree >> l.places >> f >> l.seconds;
                if (!is) throw std::invalid_argument(v);
                if (f != "none") l.frontier = std::stoi(f);
                c.log.push_back(l);
            }
        } catch (const std::exception&) {
            fail(ErrorCode::Checkpoint, "malformed value for '" + k + "' in " + path);
        }
    }
    if (!format_ok) fail(ErrorCode::Checkpoint, path + " is not a checkpoint file");
    return c;
}

bool is_excluded(const Place& p, const std::vector<Poly>& excluded) {
    return std::any_of(excluded.begin(), excluded.end(), [&](const Poly& e) { return e == p.v; });
}

struct DegreeProduct {
    LaurentSeries value;
    std::uint64_t places = 0;
};

DegreeProduct degree_product(const SigmaModule& m, int n, int d, int w, int shards,
                             const std::vector<Poly>& excluded, const std::optional<Fraction>& rate) {
    const int q = m.q();
    const std::uint64_t total = monic_count(q, d);
    const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(shards, total));
    const long long bound = rate ? ceil_mul(d, *rate) : 0;
    std::vector<DegreeProduct> partial(parts);
    std::vector<std::exception_ptr> errors(parts);

    auto work = [&](std::uint64_t s) {
        try {
            const std::uint64_t begin = total / parts * s + std::min(s, total % parts);
            const std::uint64_t end = begin + total / parts + (s < total % parts ? 1 : 0);
            LaurentSeries acc = LaurentSeries::monomial(q, Var::T, 0, 1, w);
            std::uint64_t count = 0;
            for_each_irreducible(q, d, begin, end, [&](const Place& p) {
                if (is_excluded(p, excluded)) return;
                LaurentSeries f = euler_factor_inverse(euler_factor(m, p), n, w);
                if (rate) {
                    LaurentSeries dev = f - LaurentSeries::monomial(q, Var::T, 0, 1, w);
                    if (!dev.is_zero() && dev.lead_exp() > -bound)
                        fail(ErrorCode::SlopeBoundViolated, "factor at " + p.v.to_string() + " deviates at t^" +
                                                                std::to_string(dev.lead_exp()) + ", bound t^-" +
                                                                std::to_string(bound));
                }
                acc *= f;
                ++count;
            });
            partial[s] = {std::move(acc), count};
        } catch (...) {
            errors[s] = std::current_exception();
        }
    };
    if (parts == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::uint64_t s = 0; s < parts; ++s) threads.emplace_back(work, s);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    DegreeProduct out{LaurentSeries::monomial(q, Var::T, 0, 1, w), 0};
    for (auto& p : partial) {
        out.value *= p.value;
        out.places += p.places;
    }
    return out;
}

std::optional<int> highest_change(const LaurentSeries& before, const LaurentSeries& after, int x) {
    LaurentSeries diff = (after - before).truncated(x);
    if (diff.is_zero()) return std::nullopt;
    return diff.lead_exp();
}

std::string checkpoint_key(const SigmaModule& m, int n, const PrecisionPolicy& p, const std::vector<Poly>& excluded) {
    std::string k = "q:" + std::to_string(m.q()) + ";n:" + std::to_string(n) + ";w:" +
                    std::to_string(p.precision + p.guard) + ";sigma:" + m.to_string() + ";exclude:";
    for (const Poly& e : excluded) k += e.to_string() + ",";
    return k;
}

}  // namespace

LValueResult l_value(const SigmaModule& m, int n, const PrecisionPolicy& policy, const std::vector<Poly>& excluded) {
    if (n < 0) throw std::invalid_argument("l_value needs n >= 0");
    if (policy.precision < 1 || policy.max_degree < 0 || policy.window < 1 || policy.guard < 0 || policy.shards < 1)
        throw std::invalid_argument("invalid precision policy");
    const int q = m.q();
    const int x = policy.precision;
    const int w = x + policy.guard;

    LValueResult res;
    res.policy = policy;
    std::optional<Fraction> rate;
    {
        const Fraction mu = max_slope_magnitude(slopes_of(m));
        if (mu < Fraction{n, 1}) {
            res.mu = mu;
            rate = make_fraction(n * mu.den - mu.num, mu.den);
        }
    }
    if (policy.mode == PrecisionMode::Rigorous && !rate)
        fail(ErrorCode::Divergent, "n = " + std::to_string(n) + " does not exceed the largest slope magnitude");

    int last = policy.max_degree;
    if (rate) {
        int d = 0;
        while (ceil_mul(d + 1, *rate) < x) ++d;
        if (d <= last) {
            last = d;
            res.certified = true;
        }
    }

    LaurentSeries prod = LaurentSeries::monomial(q, Var::T, 0, 1, w);
    int start = 1;
    const std::string key = checkpoint_key(m, n, policy, excluded);
    if (!policy.checkpoint.empty()) {
        if (auto c = read_checkpoint(policy.checkpoint)) {
            if (c->key != key) fail(ErrorCode::Checkpoint, policy.checkpoint + " belongs to a different computation");
            prod = parse_laurent(c->series, q);
            if (prod.precision() != w) fail(ErrorCode::Checkpoint, "checkpoint precision mismatch");
            start = c->degree + 1;
            res.places = c->places;
            res.log = c->log;
            res.degrees_used = c->degree;
        }
    }

    auto stable = [&]() {
        if (static_cast<int>(res.log.size()) < policy.window) return false;
        for (std::size_t i = res.log.size() - static_cast<std::size_t>(policy.window); i < res.log.size(); ++i)
            if (res.log[i].frontier) return false;
        return true;
    };

    bool done = policy.mode == PrecisionMode::Empirical && stable();
    int confirming = 0;
    for (int d = start; d <= last && !(done && confirming == 0); ++d) {
        const auto t0 = std::chrono::steady_clock::now();
        DegreeProduct dp = degree_product(m, n, d, w, policy.shards, excluded, rate);
        LaurentSeries next = prod * dp.value;
        DegreeLog entry;
        entry.degree = d;
        entry.places = dp.places;
        entry.frontier = highest_change(prod, next, x);
        entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        prod = std::move(next);
        res.places += dp.places;
        res.degrees_used = d;
        res.log.push_back(entry);
        if (!policy.checkpoint.empty())
            write_checkpoint(policy.checkpoint, {key, d, res.places, prod.to_string(), res.log});
        if (done) {
            if (entry.frontier)
                fail(ErrorCode::PolicyExhausted, "coefficient of t^" + std::to_string(*entry.frontier) +
                                                     " changed at degree " + std::to_string(d) +
                                                     " after stabilizing");
            --confirming;
        } else if (policy.mode == PrecisionMode::Empirical && stable()) {
            done = true;
            confirming = policy.confirm;
        }
    }
    res.stabilized = policy.mode == PrecisionMode::Empirical && stable();
    if (res.degrees_used < last) res.certified = false;

    int justified = x;
    if (policy.mode == PrecisionMode::Rigorous && !res.certified)
        justified = static_cast<int>(std::min<long long>(x, ceil_mul(res.degrees_used + 1, *rate)));
    if (policy.mode == PrecisionMode::Empirical && !res.certified && !res.stabilized)
        fail(ErrorCode::PolicyExhausted, "no stabilization above t^-" + std::to_string(x) + " by degree " +
                                             std::to_string(policy.max_degree));
    res.series = prod.truncated(justified);
    return res;
}

LValueResult l_value_of_module(const SigmaModule& m, const PrecisionPolicy& policy, const std::vector<Poly>& excluded) {
    return l_value(dual_twist(m), m.n(), policy, excluded);
}

LaurentSeries zeta_direct(int q, int n, int max_deg) {
    if (n < 1) throw std::invalid_argument("zeta_direct needs n >= 1");
    const int prec = n * (max_deg + 1);
    LaurentSeries sum(q, Var::T, prec);
    const Poly one = Poly::constant(q, Var::T, 1);
    for (int d = 0; d <= max_deg; ++d) {
        const std::uint64_t count = monic_count(q, d);
        for (std::uint64_t i = 0; i < count; ++i) {
            Poly f = Poly::from_lex_index(q, Var::T, d, i);
            sum += LaurentSeries::from_rational(one, f.pow(static_cast<unsigned long long>(n)), prec);
        }
    }
    return sum;
}

LaurentSeries rank1_twisted_sum(int q, long long alpha, int max_deg) {
    const int prec = max_deg + 1;
    PrimeField fld(q);
    const Coeff a = fld.reduce(alpha);
    if (a == 0) throw std::invalid_argument("alpha must be nonzero");
    LaurentSeries sum(q, Var::T, prec);
    Coeff ad = 1;
    for (int d = 0; d <= max_deg; ++d) {
        const Poly num = Poly::constant(q, Var::T, ad);
        const std::uint64_t count = monic_count(q, d);
        for (std::uint64_t i = 0; i < count; ++i)
            sum += LaurentSeries::from_rational(num, Poly::from_lex_index(q, Var::T, d, i), prec);
        ad = fld.mul(ad, a);
    }
    return sum;
}

}  // namespace tmot
