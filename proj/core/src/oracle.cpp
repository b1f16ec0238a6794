#include "plethysm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace plethysm {

namespace {

constexpr unsigned single_coefficient_cap = 48;
constexpr std::size_t memo_entry_cap = 1u << 22;

std::atomic<unsigned> g_threads{1};

struct CharKey {
    std::vector<unsigned> lambda;
    std::vector<unsigned> rho;
    bool operator==(const CharKey&) const = default;
};

struct CharKeyHash {
    std::size_t operator()(const CharKey& k) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](unsigned v) {
            h ^= v + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        };
        for (unsigned v : k.lambda) mix(v);
        mix(0u);
        for (unsigned v : k.rho) mix(v);
        return h;
    }
};

std::unordered_map<CharKey, Int, CharKeyHash> g_char_memo;
std::mutex g_char_mutex;

// chi^lambda evaluated on the cycle type rho[idx..], border strips removed
// largest part first
Int mn_recurse(const std::vector<unsigned>& lambda, const std::vector<unsigned>& rho,
               std::size_t idx) {
    if (lambda.empty()) return 1; // idx is past the end exactly when lambda is empty
    CharKey key{lambda, {rho.begin() + static_cast<std::ptrdiff_t>(idx), rho.end()}};
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }
    unsigned r = rho[idx];
    std::size_t len = lambda.size();
    std::vector<unsigned> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = lambda[i] + static_cast<unsigned>(len - 1 - i); // strictly decreasing
    Int total{0};
    for (std::size_t i = 0; i < len; ++i) {
        if (beta[i] < r) break;
        unsigned target = beta[i] - r;
        bool occupied = false;
        unsigned height = 0;
        for (std::size_t j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<unsigned> nb(beta);
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<unsigned> nl;
        nl.reserve(len);
        for (std::size_t j = 0; j < len; ++j) {
            unsigned part = nb[j] - static_cast<unsigned>(len - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        Int sub = mn_recurse(nl, rho, idx + 1);
        if (height % 2) total -= sub;
        else total += sub;
    }
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        if (g_char_memo.size() >= memo_entry_cap) g_char_memo.clear();
        g_char_memo.emplace(std::move(key), total);
    }
    return total;
}

Partition scale_parts(const Partition& rho, unsigned r) {
    std::vector<unsigned> parts(rho.parts());
    for (unsigned& p : parts) p *= r;
    return Partition(parts); // scaling preserves the weakly decreasing order
}

PowerSumVector multiply(const PowerSumVector& a, const PowerSumVector& b) {
    PowerSumVector out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) out[join(ia, ib)] += ca * cb;
    return out;
}

void drop_zeros(PowerSumVector& v) {
    for (auto it = v.begin(); it != v.end();)
        it = (it->second == 0) ? v.erase(it) : std::next(it);
}

// parallel map over items, preserving slot order; T = 1 stays sequential
template <typename Item, typename Fn>
void parallel_for(const std::vector<Item>& items, Fn fn) {
    unsigned workers = oracle_threads();
    if (workers <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(items.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : threads) t.join();
}

Int extract_schur_coefficient(const PowerSumVector& p, const Partition& lambda) {
    std::vector<std::pair<Partition, Rat>> terms(p.begin(), p.end());
    std::vector<Rat> partial(terms.size());
    parallel_for(terms, [&](std::size_t i) {
        partial[i] = terms[i].second * Rat(character(lambda, terms[i].first));
    });
    Rat sum{0};
    for (const Rat& x : partial) sum += x;
    if (boost::multiprecision::denominator(sum) != 1)
        throw std::logic_error("schur coefficient is not an integer");
    return boost::multiprecision::numerator(sum);
}

} // namespace

Int character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character: size mismatch between shape and cycle type");
    return mn_recurse(lambda.parts(), rho.parts(), 0);
}

Int centralizer_order(const Partition& rho) {
    Int z{1};
    std::size_t i = 0;
    while (i < rho.length()) {
        std::size_t j = i;
        while (j < rho.length() && rho[j] == rho[i]) ++j;
        unsigned mult = static_cast<unsigned>(j - i);
        for (unsigned e = 0; e < mult; ++e) z *= rho[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

Int syt_count(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    Int hooks{1};
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (std::size_t j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    return factorial(lambda.size()) / hooks;
}

PowerSumVector schur_to_powersum(const Partition& lambda) {
    PowerSumVector out;
    for (const Partition& rho : enumerate_partitions(lambda.size())) {
        Int chi = character(lambda, rho);
        if (chi != 0) out[rho] = Rat(chi, centralizer_order(rho));
    }
    return out;
}

PowerSumVector plethysm_powersum(const Partition& nu, const Partition& mu) {
    PowerSumVector outer = schur_to_powersum(nu);
    PowerSumVector inner = schur_to_powersum(mu);
    std::map<unsigned, PowerSumVector> p_of_inner; // p_r applied to s_mu
    PowerSumVector out;
    for (const auto& [sigma, c_sigma] : outer) {
        PowerSumVector prod{{Partition{}, Rat(1)}};
        for (std::size_t i = 0; i < sigma.length(); ++i) {
            unsigned r = sigma[i];
            auto it = p_of_inner.find(r);
            if (it == p_of_inner.end()) {
                PowerSumVector scaled;
                for (const auto& [rho, c] : inner) scaled[scale_parts(rho, r)] = c;
                it = p_of_inner.emplace(r, std::move(scaled)).first;
            }
            prod = multiply(prod, it->second);
        }
        for (const auto& [idx, c] : prod) out[idx] += c_sigma * c;
    }
    drop_zeros(out);
    return out;
}

Int plethysm_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
    unsigned mn = nu.size() * mu.size();
    if (lambda.size() != mn)
        throw std::invalid_argument("plethysm_coefficient: |lambda| != |mu| * |nu|");
    if (mn > single_coefficient_cap)
        throw BudgetExceeded("coefficient query exceeds the mn <= 48 cap");
    if (mn > decomposition_budget())
        std::cerr << "warning: coefficient at mn = " << mn
                  << " beyond the decomposition budget; this may take a while\n";
    Int coeff = extract_schur_coefficient(plethysm_powersum(nu, mu), lambda);
    if (coeff < 0) throw std::logic_error("negative plethysm coefficient");
    return coeff;
}

PlethysmExpansion full_decomposition(const Partition& nu, const Partition& mu) {
    unsigned mn = nu.size() * mu.size();
    if (mn > decomposition_budget())
        throw BudgetExceeded("decomposition exceeds the mn budget; "
                             "use a single-coefficient query instead");
    PowerSumVector p = plethysm_powersum(nu, mu);
    std::vector<Partition> shapes = enumerate_partitions(mn);
    std::vector<Int> coeffs(shapes.size());
    parallel_for(shapes, [&](std::size_t i) {
        coeffs[i] = extract_schur_coefficient(p, shapes[i]);
    });
    PlethysmExpansion exp{nu, mu, {}};
    Int dim{0};
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (coeffs[i] < 0) throw std::logic_error("negative plethysm coefficient");
        dim += coeffs[i] * syt_count(shapes[i]);
        exp.multiplicities.emplace(shapes[i], coeffs[i]);
    }
    unsigned m = mu.size(), n = nu.size();
    Int expected = factorial(mn) * syt_count(nu);
    Int wreath = factorial(n);
    Int fmu = syt_count(mu);
    for (unsigned i = 0; i < n; ++i) wreath *= factorial(m);
    for (unsigned i = 0; i < n; ++i) expected = expected * fmu;
    expected /= wreath;
    if (dim != expected)
        throw std::logic_error("dimension identity failed for the computed decomposition");
    return exp;
}

unsigned decomposition_budget() {
    if (const char* env = std::getenv("PLETHYSM_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 16;
}

void set_oracle_threads(unsigned n) {
    g_threads.store(n == 0 ? std::max(1u, std::thread::hardware_concurrency()) : n);
}

unsigned oracle_threads() { return std::max(1u, g_threads.load()); }

} // namespace plethysm
