#include "ffdisc/recurrence.hpp"

#include <functional>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"

namespace ffdisc {

std::complex<double> LPolynomial::eval_L(std::complex<double> w) const {
    std::complex<double> r = 0.0;
    for (std::size_t n = L.size(); n-- > 0;) r = r * w + L[n];
    return r;
}

std::complex<double> LPolynomial::eval_A(std::complex<double> w) const {
    std::complex<double> r = 0.0;
    for (std::size_t n = A.size(); n-- > 0;) r = r * w + A[n];
    return r;
}

LPolynomial l_polynomial(const Field& F, const DirichletChar& chi) {
    if (chi.is_principal()) throw std::invalid_argument("l_polynomial: principal character");
    const int d = deg(chi.modulus());
    LPolynomial lp;
    lp.L.resize(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        KahanSum s;
        for_each_monic(F, n, [&](const Poly& G) { s.add(chi.value(F, G)); });
        lp.L[static_cast<std::size_t>(n)] = s.get();
    }
    lp.A = lp.L;
    for (std::size_t m = 1; m < lp.A.size(); ++m) lp.A[m] += lp.A[m - 1];
    return lp;
}

DivisorSumSeq::DivisorSumSeq(const Field& F, const ModifiedChar& mc, std::size_t window_size) {
    (void)F;
    // char_poly = prod over distinct P | Q of (1 - f(P) z^{deg P})
    char_poly = {1.0};
    for (const auto& [P, v] : mc.twists) {
        const int dp = deg(P);
        std::vector<std::complex<double>> next(char_poly.size() + static_cast<std::size_t>(dp), 0.0);
        const std::complex<double> fv = v.value();
        for (std::size_t i = 0; i < char_poly.size(); ++i) {
            next[i] += char_poly[i];
            next[i + static_cast<std::size_t>(dp)] -= fv * char_poly[i];
        }
        char_poly = std::move(next);
    }
    const std::size_t need = std::max(window_size, char_poly.size());
    window.assign(need, 0.0);
    cum_window.assign(need, 0.0);
    window[0] = 1.0;  // s_0
    cum_window[0] = 1.0;
    N = 0;
}

void DivisorSumSeq::step() {
    // s_{N+1} = -sum_{i>=1} c_i s_{N+1-i}
    std::complex<double> s = 0.0;
    for (std::size_t i = 1; i < char_poly.size(); ++i) {
        const std::int64_t j = N + 1 - static_cast<std::int64_t>(i);
        if (j < 0) break;
        s -= char_poly[i] * window[i - 1];  // window[i-1] holds s_{N+1-i}
    }
    const std::complex<double> cum = cum_window[0] + s;
    for (std::size_t i = window.size(); i-- > 1;) {
        window[i] = window[i - 1];
        cum_window[i] = cum_window[i - 1];
    }
    window[0] = s;
    cum_window[0] = cum;
    ++N;
}

std::complex<double> DivisorSumSeq::s_at(std::int64_t j) const {
    if (j < 0) return 0.0;
    const std::int64_t off = N - j;
    if (off < 0 || off >= static_cast<std::int64_t>(window.size()))
        throw std::out_of_range("DivisorSumSeq: index outside window");
    return window[static_cast<std::size_t>(off)];
}

std::complex<double> DivisorSumSeq::cum_at(std::int64_t j) const {
    if (j < 0) return 0.0;
    const std::int64_t off = N - j;
    if (off < 0 || off >= static_cast<std::int64_t>(cum_window.size()))
        throw std::out_of_range("DivisorSumSeq: index outside window");
    return cum_window[static_cast<std::size_t>(off)];
}

std::complex<double> DivisorSumSeq::direct(const Field& F, const ModifiedChar& mc, int Nval) {
    (void)F;
    if (Nval < 0) return 0.0;
    std::complex<double> acc = 0.0;
    const std::size_t k = mc.twists.size();
    std::function<void(std::size_t, int, std::complex<double>)> rec =
        [&](std::size_t i, int left, std::complex<double> val) {
            if (i == k) {
                if (left == 0) acc += val;
                return;
            }
            const int dp = deg(mc.twists[i].first);
            std::complex<double> v = 1.0;
            for (int ei = 0; ei * dp <= left; ++ei) {
                rec(i + 1, left - ei * dp, val * v);
                v *= mc.twists[i].second.value();
            }
        };
    rec(0, Nval, 1.0);
    return acc;
}

LongSumStream::LongSumStream(const Field& F, const ModifiedChar& mc)
    : lp_(l_polynomial(F, mc.chi)),
      seq_(F, mc, static_cast<std::size_t>(deg(mc.Q)) + 2),
      d_(deg(mc.Q)) {}

std::complex<double> LongSumStream::value() const {
    const std::int64_t N = seq_.N;
    std::complex<double> u = 0.0;
    for (int m = 0; m < d_ && m <= N; ++m)
        u += lp_.A[static_cast<std::size_t>(m)] * seq_.s_at(N - m);
    if (N >= d_) u += lp_.tail() * seq_.cum_at(N - d_);
    return u;
}

void LongSumStream::step() { seq_.step(); }

std::complex<double> long_sum_matpow(const Field& F, const ModifiedChar& mc, std::int64_t N) {
    if (N < 0) return 0.0;
    const int d = deg(mc.Q);
    const LPolynomial lp = l_polynomial(F, mc.chi);
    DivisorSumSeq seq(F, mc, static_cast<std::size_t>(d) + 2);
    const std::size_t w = seq.window.size();
    const std::size_t dim = w + 1;
    using Mat = std::vector<std::vector<std::complex<double>>>;
    auto matmul = [dim](const Mat& a, const Mat& b) {
        Mat r(dim, std::vector<std::complex<double>>(dim, 0.0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                if (a[i][k] == std::complex<double>{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < dim; ++j) r[i][j] += a[i][k] * b[k][j];
            }
        return r;
    };
    // state (s_j, ..., s_{j-w+1}, cum_j); top row and cum row apply the recurrence
    Mat T(dim, std::vector<std::complex<double>>(dim, 0.0));
    for (std::size_t i = 1; i < seq.char_poly.size(); ++i) T[0][i - 1] = -seq.char_poly[i];
    for (std::size_t i = 1; i < w; ++i) T[i][i - 1] = 1.0;
    for (std::size_t i = 1; i < seq.char_poly.size(); ++i) T[w][i - 1] = -seq.char_poly[i];
    T[w][w] = 1.0;

    Mat power(dim, std::vector<std::complex<double>>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) power[i][i] = 1.0;
    Mat base = T;
    std::int64_t e = N;
    while (e) {
        if (e & 1) power = matmul(power, base);
        base = matmul(base, base);
        e >>= 1;
    }
    // initial state at j = 0
    std::vector<std::complex<double>> st(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) st[i] = power[i][0] + power[i][w];  // state0 has 1 at rows 0 and w
    std::complex<double> u = 0.0;
    for (int m = 0; m < d && m <= N; ++m) u += lp.A[static_cast<std::size_t>(m)] * st[static_cast<std::size_t>(m)];
    if (N >= d) {
        std::complex<double> cum_nd = st[w];
        for (int i = 0; i < d; ++i) cum_nd -= st[static_cast<std::size_t>(i)];
        u += lp.tail() * cum_nd;
    }
    return u;
}

}  // namespace ffdisc
