#include "ffdisc/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ffdisc {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

Poly monic_of_index(const Field& F, int n, std::uint64_t idx) {
    if (n < 0) throw std::invalid_argument("monic_of_index: negative degree");
    Poly r;
    r.c.assign(static_cast<std::size_t>(n) + 1, 0);
    r.c[static_cast<std::size_t>(n)] = 1;
    for (int i = 0; i < n; ++i) {
        r.c[static_cast<std::size_t>(i)] = F.elem_of_size(static_cast<std::uint32_t>(idx % F.q()));
        idx /= F.q();
    }
    return r;
}

std::uint64_t monic_index(const Field& F, const Poly& g) {
    if (!is_monic(g)) throw std::invalid_argument("monic_index: not monic");
    std::uint64_t n = 0;
    for (std::size_t i = g.c.size() - 1; i-- > 0;) n = n * F.q() + F.size_of(g.c[i]);
    return n;
}

void for_each_monic(const Field& F, int n, const std::function<void(const Poly&)>& fn) {
    const std::uint64_t total = count_monics(F, n);
    for (std::uint64_t i = 0; i < total; ++i) fn(monic_of_index(F, n, i));
}

void for_each_monic_up_to(const Field& F, int n, const std::function<void(const Poly&)>& fn) {
    for (int m = 0; m <= n; ++m) for_each_monic(F, m, fn);
}

void for_each_poly_below(const Field& F, int n, const std::function<void(const Poly&)>& fn) {
    if (n < 0) return;
    const std::uint64_t total = pow_u64(F.q(), static_cast<std::uint32_t>(n));
    for (std::uint64_t i = 0; i < total; ++i) fn(lex_unrank(F, i));
}

void check_short_interval(const Field& F, const Poly& G0, int H) {
    (void)F;
    if (!is_monic(G0)) throw std::invalid_argument("short_interval: G0 must be monic");
    if (H < 1 || H > deg(G0)) throw std::invalid_argument("short_interval: need 1 <= H <= deg G0");
}

Poly short_interval_base(const Field& F, const Poly& G0, int H) {
    check_short_interval(F, G0, H);
    Poly r = G0;
    for (int i = 0; i < H; ++i) r.c[static_cast<std::size_t>(i)] = 0;
    return r;
}

Poly short_interval_member(const Field& F, const Poly& G0, int H, std::uint64_t j) {
    Poly r = short_interval_base(F, G0, H);
    for (int i = 0; i < H; ++i) {
        r.c[static_cast<std::size_t>(i)] = F.elem_of_size(static_cast<std::uint32_t>(j % F.q()));
        j /= F.q();
    }
    return r;
}

IrrTable::IrrTable(const Field& F, std::string cache_dir) : F_(F), cache_dir_(std::move(cache_dir)) {}

const std::vector<Poly>& IrrTable::of_degree(int d) const {
    if (d < 1) throw std::invalid_argument("IrrTable: degree must be >= 1");
    ensure(d);
    return tabs_[static_cast<std::size_t>(d)];
}

std::uint64_t IrrTable::rank(const Poly& P) const {
    const auto& tab = of_degree(deg(P));
    auto it = std::lower_bound(tab.begin(), tab.end(), P, [this](const Poly& a, const Poly& b) {
        return lex_less(F_, a, b);
    });
    if (it == tab.end() || !(*it == P)) throw std::invalid_argument("IrrTable: not an irreducible in table");
    return static_cast<std::uint64_t>(it - tab.begin());
}

void IrrTable::ensure(int d) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (tabs_.size() <= static_cast<std::size_t>(d)) tabs_.resize(static_cast<std::size_t>(d) + 1);
    for (int n = 1; n <= d; ++n) {
        auto& tab = tabs_[static_cast<std::size_t>(n)];
        if (!tab.empty()) continue;
        if (load_cache(n, tab)) continue;
        const std::uint64_t total = count_monics(F_, n);
        for (std::uint64_t i = 0; i < total; ++i) {
            Poly g = monic_of_index(F_, n, i);
            if (n == 1 || is_irreducible(F_, g)) tab.push_back(std::move(g));
        }
        store_cache(n, tab);
    }
}

std::string IrrTable::cache_path(int d) const {
    return cache_dir_ + "/irr_q" + std::to_string(F_.q()) + "_d" + std::to_string(d) + ".txt";
}

bool IrrTable::load_cache(int d, std::vector<Poly>& out) const {
    if (cache_dir_.empty()) return false;
    std::ifstream in(cache_path(d));
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    std::ostringstream want;
    want << "ffdisc-irr v1 q=" << F_.q() << " deg=" << d << " count=";
    if (header.rfind(want.str(), 0) != 0) return false;
    const std::uint64_t count = std::strtoull(header.c_str() + want.str().size(), nullptr, 10);
    std::vector<Poly> tab;
    tab.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Poly g;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) g.c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        g.trim();
        if (deg(g) != d || !is_monic(g)) return false;
        tab.push_back(std::move(g));
    }
    if (tab.size() != count) return false;
    // stored in natural packed order; present in the active lex order
    std::sort(tab.begin(), tab.end(), [this](const Poly& a, const Poly& b) { return lex_less(F_, a, b); });
    out = std::move(tab);
    return true;
}

void IrrTable::store_cache(int d, const std::vector<Poly>& tab) const {
    if (cache_dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec) return;
    const std::string path = cache_path(d);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "ffdisc-irr v1 q=" << F_.q() << " deg=" << d << " count=" << tab.size() << "\n";
        // natural packed order, independent of the active element order
        std::vector<Poly> sorted = tab;
        std::sort(sorted.begin(), sorted.end(), [](const Poly& a, const Poly& b) {
            if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
            for (std::size_t i = a.c.size(); i-- > 0;)
                if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
            return false;
        });
        for (const Poly& g : sorted) {
            for (std::size_t i = 0; i < g.c.size(); ++i) {
                if (i) out << ",";
                out << g.c[i];
            }
            out << "\n";
        }
    }
    std::filesystem::rename(tmp, path, ec);  // atomic publish
    if (ec) std::filesystem::remove(tmp, ec);
}

bool is_irreducible(const Field& F, const Poly& f) {
    if (deg(f) < 1) return false;
    const Poly fm = poly_make_monic(F, f);
    const int n = deg(fm);
    if (n == 1) return true;
    // Rabin: x^{q^n} = x mod f, and gcd(x^{q^{n/l}} - x, f) = 1 for prime l | n
    const Poly x = poly_t();
    auto xq_iter = [&](std::uint32_t times) {
        // x^{q^times} mod f by repeated q-power
        Poly r = x;
        for (std::uint32_t i = 0; i < times; ++i) r = poly_powmod(F, r, F.q(), fm);
        return r;
    };
    std::vector<std::uint32_t> prime_divs;
    {
        std::uint32_t m = static_cast<std::uint32_t>(n);
        for (std::uint32_t d = 2; d * d <= m; ++d)
            while (m % d == 0) {
                if (prime_divs.empty() || prime_divs.back() != d) prime_divs.push_back(d);
                m /= d;
            }
        if (m > 1) prime_divs.push_back(m);
    }
    for (std::uint32_t l : prime_divs) {
        Poly h = xq_iter(static_cast<std::uint32_t>(n) / l);
        Poly diff = poly_sub(F, h, x);
        if (diff.is_zero()) return false;
        if (deg(poly_gcd(F, diff, fm)) != 0) return false;
    }
    Poly top = xq_iter(static_cast<std::uint32_t>(n));
    return poly_sub(F, top, x).is_zero();
}

}  // namespace ffdisc
