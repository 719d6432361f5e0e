#pragma once

#include <string>
#include <vector>

#include "ffdisc/multfn.hpp"

namespace ffdisc {

// Polynomial literals. The base grammar is
//   poly  := term ('+' term)*
//   term  := coeff | coeff '*'? 't' ('^' uint)? | 't' ('^' uint)?
//   coeff := uint (reduced mod p) | '[' poly-in-u ']'   (extension coefficients)
// with insignificant whitespace; ascending comma-separated coefficient lists
// ("1,0,1", entries are packed element indices) are accepted as well.
Poly parse_poly(const Field& F, const std::string& text);
// extended form for CLI moduli: products, powers and parentheses over the
// base grammar, e.g. "t^2*(t+1)^2"
Poly parse_poly_expr(const Field& F, const std::string& text);
// canonical symbolic literal; parse_poly(print_poly(g)) == g
std::string print_poly(const Field& F, const Poly& g);

// "a/m" means e(2 pi i a/m)
RootOfUnity parse_root_of_unity(const std::string& text);

// twist list "P:a/m,P:a/m,..."; keys use the symbolic grammar
std::vector<std::pair<Poly, Phase>> parse_twists(const Field& F, const std::string& text);

// modchar{q=..,Q=<poly>,chi=<exponent-tuple>,twist={<P>:<a/m>,...}}
ModifiedChar parse_modchar(const Field& F, const std::string& text);
std::string print_modchar(const Field& F, const ModifiedChar& mc);

// character identity (Q-literal, exponent-tuple)
std::string print_char_id(const Field& F, const DirichletChar& chi);
std::string print_short_char_id(const ShortIntervalChar& xi);

// flat key=value configuration with [section] headers
struct RunConfig {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::string ext_modulus;       // literal over F_p in u, empty = default
    std::string element_order = "natural";  // or "generator"
    std::uint64_t max_enum = 1u << 24;
    std::uint64_t node_limit = 1000000;
    double tolerance = 1e-9;
    std::string cache_dir;
    std::string format = "csv";  // or "json"
    std::uint64_t seed = 0;

    Field make_field() const;
    void validate() const;
};
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
// FFDISC_CACHE overrides cache_dir when set
std::string effective_cache_dir(const RunConfig& cfg);

// CSV with a header row; floats at 17 significant digits
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& str() const { return out_; }
    static std::string num(double x);
    static std::string num(std::int64_t x);

  private:
    std::string out_;
    std::size_t width_;
};

}  // namespace ffdisc
