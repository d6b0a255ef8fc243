#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/int_linalg.hpp"
#include "darboux/inverse.hpp"
#include "darboux/poly_gcd.hpp"
#include "darboux/projective.hpp"
#include "darboux/resultant.hpp"
#include "darboux/roots.hpp"

namespace darboux::geometry {

using inverse::CurveConfiguration;

enum class SingTag { Smooth, A, D, E6, E7, E8, Unsupported };

inline std::string tag_name(SingTag t, int index) {
    switch (t) {
        case SingTag::Smooth: return "smooth";
        case SingTag::A: return "A" + std::to_string(index);
        case SingTag::D: return "D" + std::to_string(index);
        case SingTag::E6: return "E6";
        case SingTag::E7: return "E7";
        case SingTag::E8: return "E8";
        default: return "unsupported";
    }
}

/// One analytic branch of a simple singularity in its quasi-homogeneous
/// normal form: weighted degree (under the minimal integer weights of the
/// germ), multiplicity at the point, and, for D/E types, whether the
/// branch is tangent to the repeated direction of the tangent cone.
struct Branch {
    int wdeg = 0;
    int mult = 1;
    bool on_double_direction = false;
};

struct SingularityType {
    SingTag tag = SingTag::Unsupported;
    int index = 0;  // n of A_n / D_n, or 6/7/8
    int mu = 0;
    int tjurina = 0;  // equals mu for the supported quasi-homogeneous types
    std::pair<int, int> weights{0, 0};
    std::vector<Branch> branches;
    int weight_sum = 0;  // w_x + w_y in the same normalization as branch wdegs

    std::string name() const { return tag_name(tag, index); }
    int multiplicity() const {
        int m = 0;
        for (const auto& b : branches) m += b.mult;
        return m;
    }
};

/// Parse a type name like "A3", "D10", "E7" (used by declared points).
inline std::optional<std::pair<SingTag, int>> parse_type_name(const std::string& s) {
    if (s == "E6") return std::make_pair(SingTag::E6, 6);
    if (s == "E7") return std::make_pair(SingTag::E7, 7);
    if (s == "E8") return std::make_pair(SingTag::E8, 8);
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D')) {
        int n = std::stoi(s.substr(1));
        return std::make_pair(s[0] == 'A' ? SingTag::A : SingTag::D, n);
    }
    return std::nullopt;
}

/// Fill weights/branches/weight_sum from (tag, index).
inline SingularityType type_data(SingTag tag, int n) {
    SingularityType t;
    t.tag = tag;
    t.index = n;
    switch (tag) {
        case SingTag::A:
            t.mu = n;
            if (n % 2 == 0) {
                t.weights = {n + 1, 2};
                t.branches = {{2 * n + 2, 2, false}};
                t.weight_sum = n + 3;
            } else {
                t.weights = {(n + 1) / 2, 1};
                t.branches = {{(n + 1) / 2, 1, false}, {(n + 1) / 2, 1, false}};
                t.weight_sum = (n + 3) / 2;
            }
            break;
        case SingTag::D:
            t.mu = n;
            if (n == 4) {
                t.weights = {1, 1};
                t.branches = {{1, 1, false}, {1, 1, false}, {1, 1, false}};
                t.weight_sum = 2;
            } else if (n % 2 == 0) {
                t.weights = {(n - 2) / 2, 1};
                t.branches = {{1, 1, false},
                              {(n - 2) / 2, 1, true},
                              {(n - 2) / 2, 1, true}};
                t.weight_sum = n / 2;
            } else {
                t.weights = {n - 2, 2};
                t.branches = {{2, 1, false}, {2 * n - 4, 2, true}};
                t.weight_sum = n;
            }
            break;
        case SingTag::E6:
            t.mu = 6;
            t.weights = {4, 3};
            t.branches = {{12, 3, true}};
            t.weight_sum = 7;
            break;
        case SingTag::E7:
            t.mu = 7;
            t.weights = {3, 2};
            t.branches = {{3, 1, true}, {6, 2, true}};
            t.weight_sum = 5;
            break;
        case SingTag::E8:
            t.mu = 8;
            t.weights = {5, 3};
            t.branches = {{15, 3, true}};
            t.weight_sum = 8;
            break;
        case SingTag::Smooth:
            t.mu = 0;
            t.weights = {1, 1};
            t.branches = {{1, 1, false}};
            t.weight_sum = 2;
            break;
        default:
            break;
    }
    t.tjurina = t.mu;
    return t;
}

/// A local germ: polynomial in two chart variables vanishing at the
/// origin, after translating the point of interest.
template <Scalar K>
struct LocalGerm {
    Polynomial<K> f;  // two variables named "u","v"
};

inline const std::vector<std::string>& germ_vars() {
    static const std::vector<std::string> v{"u", "v"};
    return v;
}

/// Local equation of a homogeneous curve at a projective point, in germ
/// coordinates. The chart is chosen by the first unit coordinate; a point
/// with X=0 on the line at infinity goes through the Y-chart.
template <Scalar K>
LocalGerm<K> local_germ(const Polynomial<K>& F, const ProjPoint<K>& a) {
    const K proto = F.proto();
    Polynomial<K> g(germ_vars(), proto);
    Polynomial<K> u = Polynomial<K>::variable(germ_vars(), "u", proto);
    Polynomial<K> v = Polynomial<K>::variable(germ_vars(), "v", proto);
    std::map<std::string, Polynomial<K>> images;
    if (!a.h[2].is_zero()) {
        // affine chart z=1: x = u + a_x, y = v + a_y
        images["x"] = u + Polynomial<K>::constant(germ_vars(), a.h[0]);
        images["y"] = v + Polynomial<K>::constant(germ_vars(), a.h[1]);
        images["z"] = Polynomial<K>::constant(germ_vars(), proto.one());
    } else if (!a.h[0].is_zero()) {
        // chart x=1: (u,v) = (y - a_y, z)
        images["x"] = Polynomial<K>::constant(germ_vars(), proto.one());
        images["y"] = u + Polynomial<K>::constant(germ_vars(), a.h[1]);
        images["z"] = v;
    } else {
        // chart y=1: (u,v) = (x, z)
        images["x"] = u;
        images["y"] = Polynomial<K>::constant(germ_vars(), proto.one());
        images["z"] = v;
    }
    return {F.substitute(images)};
}

template <Scalar K>
int germ_multiplicity(const Polynomial<K>& f) {
    if (f.is_zero()) return -1;
    int m = -1;
    for (const auto& [e, c] : f.terms()) {
        int s = 0;
        for (int k : e) s += k;
        if (m < 0 || s < m) m = s;
    }
    return m;
}

/// Lowest-degree homogeneous part of a germ.
template <Scalar K>
Polynomial<K> germ_leading_form(const Polynomial<K>& f) {
    int m = germ_multiplicity(f);
    Polynomial<K> out(f.vars(), f.proto());
    for (const auto& [e, c] : f.terms()) {
        int s = 0;
        for (int k : e) s += k;
        if (s == m) out.add_term(e, c);
    }
    return out;
}

struct NonIsolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Order of vanishing of Res_v(g1,g2) at u=0, with an automatic seeded
/// shear; each shear's validity is checked exactly before the order is
/// trusted: the shear is accepted only if the common zeros of (g1,g2) on
/// the fiber u=0 all sit at v=0 and one leading v-coefficient is a unit
/// there (so the resultant order equals the local intersection number).
template <Scalar K>
int sheared_intersection_order(Polynomial<K> g1, Polynomial<K> g2) {
    const K proto = g1.proto();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> dist(1, 1000);
    for (int attempt = 0; attempt < 8; ++attempt) {
        K t = attempt == 0 ? proto.zero() : proto.from_int(dist(rng));
        Polynomial<K> u = Polynomial<K>::variable(germ_vars(), "u", proto);
        Polynomial<K> v = Polynomial<K>::variable(germ_vars(), "v", proto);
        std::map<std::string, Polynomial<K>> shear{{"u", u + v * t}};
        Polynomial<K> h1 = g1.substitute(shear);
        Polynomial<K> h2 = g2.substitute(shear);
        if (h1.is_zero() || h2.is_zero()) throw NonIsolatedError("zero partial");
        // common factor handling
        Polynomial<K> d = poly_gcd(h1, h2);
        if (d.total_degree() > 0) {
            if (d.constant_term().is_zero())
                throw NonIsolatedError("positive-dimensional common zero locus");
            h1 = exact_divide(h1, d);
            h2 = exact_divide(h2, d);
        }
        if (h1.degree_in("v") < 1 && h2.degree_in("v") < 1) {
            // both free of v after shear; intersection along the fiber is
            // read off the u-orders directly
            continue;
        }
        // validity: unit leading v-coefficient at u=0 for one of them
        const K zero = proto.zero();
        bool lc_ok = false;
        for (const auto* h : {&h1, &h2}) {
            if (h->degree_in("v") < 1) continue;
            K lc0 = h->leading_coeff_in("v").eval_partial("u", zero).constant_term();
            if (lc0.is_unit()) { lc_ok = true; break; }
        }
        if (!lc_ok) continue;
        // unique common zero on the fiber u=0: gcd of the two univariate
        // restrictions must be a power of v
        UPoly<K> r1 = as_univariate(h1.eval_partial("u", zero), "v");
        UPoly<K> r2 = as_univariate(h2.eval_partial("u", zero), "v");
        UPoly<K> hv = upoly::gcd(r1, r2);
        bool pure_power = true;
        for (std::size_t i = 0; i + 1 < hv.size(); ++i)
            if (!hv[i].is_zero()) { pure_power = false; break; }
        if (!pure_power) continue;
        Polynomial<K> R = resultant(h1, h2, "v");
        if (R.is_zero()) throw NonIsolatedError("vanishing resultant");
        return upoly::order_at(as_univariate(R, "u"), proto.zero());
    }
    throw std::runtime_error("sheared_intersection_order: no valid shear found");
}

} // namespace detail

/// Milnor number of C at a: local intersection multiplicity of the two
/// partials of the local equation, via a validity-checked sheared
/// resultant order.
template <Scalar K>
int milnor_number(const Polynomial<K>& C, const ProjPoint<K>& a) {
    auto germ = local_germ(C, a);
    if (!germ.f.constant_term().is_zero())
        throw std::invalid_argument("milnor_number: point not on curve");
    Polynomial<K> fu = germ.f.derivative("u");
    Polynomial<K> fv = germ.f.derivative("v");
    if (fu.constant_term().is_unit() || fv.constant_term().is_unit()) return 0;
    return detail::sheared_intersection_order(fu, fv);
}

/// Local intersection number of two curves at a common point. For a line,
/// the order of vanishing of the other curve along a parametrization; in
/// general the sheared resultant order of the two local equations.
template <Scalar K>
int intersection_multiplicity(const Polynomial<K>& C, const Polynomial<K>& D,
                              const ProjPoint<K>& a) {
    auto gc = local_germ(C, a);
    auto gd = local_germ(D, a);
    if (!gc.f.constant_term().is_zero() || !gd.f.constant_term().is_zero())
        throw std::invalid_argument("intersection_multiplicity: point not on both curves");
    auto line_order = [&](const Polynomial<K>& line_germ,
                          const Polynomial<K>& other) -> std::optional<int> {
        if (germ_multiplicity(line_germ) != 1 || line_germ.total_degree() != 1)
            return std::nullopt;
        // parametrize a*u + b*v = 0 through the origin
        const K proto = other.proto();
        K acoef = line_germ.coeff_in("u", 1).constant_term();
        K bcoef = line_germ.coeff_in("v", 1).constant_term();
        std::vector<std::string> tv{"t"};
        Polynomial<K> t = Polynomial<K>::variable(tv, "t", proto);
        std::map<std::string, Polynomial<K>> par;
        if (bcoef.is_unit()) {
            par["u"] = t;
            par["v"] = t * (-(acoef / bcoef));
        } else {
            par["u"] = t * (-(bcoef / acoef));
            par["v"] = t;
        }
        Polynomial<K> restricted = other.substitute(par);
        if (restricted.is_zero())
            throw std::invalid_argument("intersection_multiplicity: common component");
        return upoly::order_at(as_univariate(restricted, "t"), proto.zero());
    };
    if (auto o = line_order(gd.f, gc.f)) return *o;
    if (auto o = line_order(gc.f, gd.f)) return *o;
    if (!coprime(gc.f, gd.f))
        throw std::invalid_argument("intersection_multiplicity: common component");
    return detail::sheared_intersection_order(gc.f, gd.f);
}

inline int modified_tjurina(int t, int i) {
    if (i < 1) throw std::invalid_argument("modified_tjurina: i >= 1 required");
    return t + i - 1;
}

/// Classify the germ of a plane curve at a point among the simple types.
template <Scalar K>
SingularityType classify_germ(const Polynomial<K>& f_in) {
    SingularityType out;
    Polynomial<K> f = f_in;
    if (!f.constant_term().is_zero())
        throw std::invalid_argument("classify_germ: germ does not vanish");
    const int m = germ_multiplicity(f);
    if (m == 1) return type_data(SingTag::Smooth, 0);
    int mu;
    try {
        mu = detail::sheared_intersection_order(f.derivative("u"), f.derivative("v"));
    } catch (const NonIsolatedError&) {
        out.tag = SingTag::Unsupported;
        return out;
    }
    if (m == 2) {
        if (mu < 1) { out.tag = SingTag::Unsupported; return out; }
        return type_data(SingTag::A, mu);
    }
    if (m == 3) {
        Polynomial<K> phi = germ_leading_form(f);
        Polynomial<K> g = poly_gcd(poly_gcd(phi, phi.derivative("u")),
                                   phi.derivative("v"));
        const int dg = g.total_degree();
        if (dg == 0) {
            if (mu != 4) { out.tag = SingTag::Unsupported; return out; }
            return type_data(SingTag::D, 4);
        }
        if (dg == 1) {
            if (mu < 5) { out.tag = SingTag::Unsupported; return out; }
            return type_data(SingTag::D, mu);
        }
        if (dg == 2) {
            if (mu == 6) return type_data(SingTag::E6, 6);
            if (mu == 7) return type_data(SingTag::E7, 7);
            if (mu == 8) return type_data(SingTag::E8, 8);
        }
        out.tag = SingTag::Unsupported;
        return out;
    }
    out.tag = SingTag::Unsupported;
    return out;
}

template <Scalar K>
SingularityType classify_ade(const Polynomial<K>& C, const ProjPoint<K>& a) {
    return classify_germ(local_germ(C, a).f);
}

/// The repeated linear direction of a multiplicity-3 germ's tangent cone
/// (for D_n with n >= 5 and the E types); nullopt otherwise.
template <Scalar K>
std::optional<Polynomial<K>> double_direction(const Polynomial<K>& germ) {
    if (germ_multiplicity(germ) != 3) return std::nullopt;
    Polynomial<K> phi = germ_leading_form(germ);
    Polynomial<K> g = poly_gcd(poly_gcd(phi, phi.derivative("u")),
                               phi.derivative("v"));
    if (g.total_degree() == 1) return g;
    if (g.total_degree() == 2) {
        // perfect cube: g = l^2; recover l via gcd with a derivative
        Polynomial<K> l = poly_gcd(g, g.derivative("u"));
        if (l.total_degree() != 1) l = poly_gcd(g, g.derivative("v"));
        if (l.total_degree() == 1) return l;
    }
    return std::nullopt;
}

/// Per-component local data at a configuration point.
template <Scalar K>
struct LocalComponentData {
    int comp = 0;  // index into the configuration; -1 is the line at infinity
    int mult = 0;
    std::optional<Polynomial<K>> tangent;  // for mult-1 or double-cone components
    int wdeg_sum = 0;                      // assigned branch weighted degrees
};

template <Scalar K>
struct PointOnConfig {
    ProjPoint<K> point;
    SingularityType type;  // of the union germ (with L_inf when at infinity)
    std::vector<LocalComponentData<K>> comps;
    std::string label;
};

namespace detail {

template <Scalar K>
std::optional<Polynomial<K>> germ_tangent(const Polynomial<K>& g) {
    const int m = germ_multiplicity(g);
    Polynomial<K> lead = germ_leading_form(g);
    if (m == 1) return lead;
    // tangent cone l^m: take gcd with derivatives to find l
    Polynomial<K> l = poly_gcd(poly_gcd(lead, lead.derivative("u")),
                               lead.derivative("v"));
    while (l.total_degree() > 1) {
        Polynomial<K> l2 = poly_gcd(l, l.derivative("u"));
        if (l2.total_degree() < 1) l2 = poly_gcd(l, l.derivative("v"));
        if (l2.total_degree() < 1 || l2.total_degree() >= l.total_degree())
            return std::nullopt;
        l = l2;
    }
    if (l.total_degree() == 1) return l;
    return std::nullopt;
}

template <Scalar K>
bool proportional_linear(const Polynomial<K>& a, const Polynomial<K>& b) {
    // both linear forms in (u,v)
    K au = a.coeff_in("u", 1).constant_term(), av = a.coeff_in("v", 1).constant_term();
    K bu = b.coeff_in("u", 1).constant_term(), bv = b.coeff_in("v", 1).constant_term();
    return (au * bv - av * bu).is_zero();
}

/// Distribute the type's branches over the components through the point.
/// Returns false if the combinatorics do not match (caller reports).
/// Greedy cover of component multiplicities by a branch pool, largest
/// multiplicities first (the pools are tiny and stereotyped).
template <Scalar K>
bool take_branches(std::vector<LocalComponentData<K>*>& comps,
                   std::vector<Branch>& pool) {
    std::sort(comps.begin(), comps.end(),
              [](auto* a, auto* b) { return a->mult > b->mult; });
    std::sort(pool.begin(), pool.end(),
              [](const Branch& a, const Branch& b) { return a.mult > b.mult; });
    for (auto* c : comps) {
        int need = c->mult;
        for (auto& b : pool) {
            if (b.mult > 0 && b.mult <= need) {
                need -= b.mult;
                c->wdeg_sum += b.wdeg;
                b.mult = 0;
            }
            if (need == 0) break;
        }
        if (need != 0) return false;
    }
    for (const auto& b : pool)
        if (b.mult != 0) return false;
    return true;
}

template <Scalar K>
bool assign_branches(const SingularityType& type,
                     std::vector<LocalComponentData<K>>& comps,
                     const std::optional<Polynomial<K>>& double_dir) {
    int total_mult = 0;
    for (const auto& c : comps) total_mult += c.mult;
    if (total_mult != type.multiplicity()) return false;
    for (auto& c : comps) c.wdeg_sum = 0;

    if (comps.size() == 1) {
        for (const auto& b : type.branches) comps[0].wdeg_sum += b.wdeg;
        return true;
    }

    bool needs_direction = false;
    for (const auto& b : type.branches)
        if (b.on_double_direction) needs_direction = true;

    if (!needs_direction) {
        // branches interchangeable up to multiplicity (A and D4 types)
        std::vector<Branch> pool = type.branches;
        std::vector<LocalComponentData<K>*> all;
        for (auto& c : comps) all.push_back(&c);
        return take_branches(all, pool);
    }

    // D_{>=5} / E types: split branches by direction, then match the
    // components by tangent and multiplicity.
    if (!double_dir) return false;
    std::vector<Branch> dd_pool, sd_pool;
    for (const auto& b : type.branches)
        (b.on_double_direction ? dd_pool : sd_pool).push_back(b);
    std::vector<LocalComponentData<K>*> dd_comps, sd_comps;
    for (auto& c : comps) {
        bool on_dd = c.tangent && proportional_linear(*c.tangent, *double_dir);
        if (on_dd || c.mult >= 2) dd_comps.push_back(&c);
        else sd_comps.push_back(&c);
    }
    return take_branches(sd_comps, sd_pool) && take_branches(dd_comps, dd_pool);
}

} // namespace detail

/// Exact Hilbert-function degree of the singular scheme V(C_x, C_y, C):
/// the dimension of the degree-t graded piece of the quotient ring must
/// stabilize across t in {3e-1, 3e, 3e+1}.
template <Scalar K>
int deg_X(const Polynomial<K>& C) {
    if (!C.is_homogeneous() || C.vars() != proj_vars())
        throw std::invalid_argument("deg_X: homogeneous input in x,y,z required");
    if (!is_squarefree(C))
        throw std::invalid_argument("deg_X: curve has a multiple factor");
    const int e = C.total_degree();
    std::vector<Polynomial<K>> gens{C.derivative("x"), C.derivative("y"), C};
    std::vector<int> gdeg{e - 1, e - 1, e};
    std::optional<int> value;
    for (int t : {3 * e - 1, 3 * e, 3 * e + 1}) {
        auto mons = inverse::detail::monomials_of_degree(t);
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
        std::size_t rows = 0;
        for (std::size_t g = 0; g < gens.size(); ++g)
            rows += inverse::detail::monomials_of_degree(t - gdeg[g]).size();
        int dim;
        if constexpr (std::is_same_v<K, Rational>) {
            std::vector<std::vector<Integer>> m(
                rows, std::vector<Integer>(mons.size(), Integer(0)));
            std::size_t r = 0;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                Integer den(1);
                for (const auto& [e2, c] : gens[g].terms())
                    den = lcm(den, c.denominator());
                for (const auto& sh : inverse::detail::monomials_of_degree(t - gdeg[g])) {
                    for (const auto& [e2, c] : gens[g].terms()) {
                        std::vector<int> key{e2[0] + sh[0], e2[1] + sh[1], e2[2] + sh[2]};
                        Rational scaled = c * Rational(den);
                        m[r][index.at(key)] = scaled.numerator();
                    }
                    ++r;
                }
            }
            auto res = IntegerKernel::compute(m);
            dim = static_cast<int>(mons.size() - res.rank);
        } else {
            Matrix<K> m(rows, mons.size(), C.proto());
            std::size_t r = 0;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                for (const auto& sh : inverse::detail::monomials_of_degree(t - gdeg[g])) {
                    for (const auto& [e2, c] : gens[g].terms()) {
                        std::vector<int> key{e2[0] + sh[0], e2[1] + sh[1], e2[2] + sh[2]};
                        m.at(r, index.at(key)) = c;
                    }
                    ++r;
                }
            }
            dim = static_cast<int>(mons.size() - m.rank());
        }
        if (value && *value != dim)
            throw std::runtime_error("deg_X: Hilbert function did not stabilize");
        value = dim;
    }
    return *value;
}

/// Declared point: coordinates plus optional expected type and component
/// names, all verified against the configuration.
template <Scalar K>
struct DeclaredPoint {
    ProjPoint<K> point;
    std::string name;
    std::optional<std::string> type_name;
    std::vector<std::string> component_names;  // may include "Linf"
};

namespace detail {

/// All rational (resp. F_p) singular points of the affine part of C plus
/// all points of C on the line at infinity.
template <Scalar K>
std::vector<ProjPoint<K>> candidate_points(const Polynomial<K>& C) {
    std::vector<ProjPoint<K>> pts;
    const K proto = C.proto();
    auto push_unique = [&](ProjPoint<K> p) {
        for (const auto& q : pts)
            if (q == p) return;
        pts.push_back(std::move(p));
    };
    Polynomial<K> u = dehomogenize_poly(C);
    Polynomial<K> ux = u.derivative("x"), uy = u.derivative("y");

    if constexpr (std::is_same_v<K, GFp>) {
        const std::uint64_t p = proto.modulus();
        if (p > 2000)
            throw std::domain_error("candidate_points: modulus too large for search");
        for (std::uint64_t i = 0; i < p; ++i)
            for (std::uint64_t j = 0; j < p; ++j) {
                std::vector<K> at{GFp(i, p), GFp(j, p)};
                if (u.eval(at).is_zero() && ux.eval(at).is_zero() &&
                    uy.eval(at).is_zero())
                    push_unique(ProjPoint<K>(GFp(i, p), GFp(j, p), GFp(1, p)));
            }
        UPoly<K> top = as_univariate(
            C.eval_partial("z", proto.zero()).eval_partial("x", proto.one())
             .with_vars({"y"}), "y");
        for (auto& [root, mult] : gfp_roots(top))
            push_unique(ProjPoint<K>(proto.one(), root, proto.zero()));
        Polynomial<K> tf = C.eval_partial("z", proto.zero());
        if (tf.degree_in("y") < tf.total_degree())
            push_unique(ProjPoint<K>(proto.zero(), proto.one(), proto.zero()));
        return pts;
    } else {
        // rational search by resultants in both sweep directions
        auto sweep = [&](const std::string& av, const std::string& bv) {
            Polynomial<K> R;
            try {
                R = resultant(ux, uy, bv);
            } catch (const std::invalid_argument&) {
                return;
            }
            if (R.is_zero()) return;
            auto rep = rational_roots(as_univariate(R.with_vars({av}), av));
            for (auto& [x0, mult] : rep.roots) {
                UPoly<K> r1 = as_univariate(
                    ux.eval_partial(av, x0).with_vars({bv}), bv);
                UPoly<K> r2 = as_univariate(
                    uy.eval_partial(av, x0).with_vars({bv}), bv);
                upoly::trim(r1);
                upoly::trim(r2);
                UPoly<K> g = r1.empty() ? r2 : r2.empty() ? r1 : upoly::gcd(r1, r2);
                auto yrep = rational_roots(g);
                for (auto& [y0, m2] : yrep.roots) {
                    K xx = av == "x" ? x0 : y0;
                    K yy = av == "x" ? y0 : x0;
                    std::vector<K> at{xx, yy};
                    if (u.eval(at).is_zero())
                        push_unique(ProjPoint<K>(xx, yy, proto.one()));
                }
            }
        };
        sweep("x", "y");
        sweep("y", "x");
        // infinity: rational points of C on z=0
        Polynomial<K> tf = C.eval_partial("z", proto.zero());
        auto ty = rational_roots(as_univariate(
            tf.eval_partial("x", proto.one()).with_vars({"y"}), "y"));
        for (auto& [y0, mult] : ty.roots)
            push_unique(ProjPoint<K>(proto.one(), y0, proto.zero()));
        if (tf.degree_in("y") < tf.total_degree())
            push_unique(ProjPoint<K>(proto.zero(), proto.one(), proto.zero()));
        return pts;
    }
}

} // namespace detail

/// Assemble the eta-geometric points of C u L_inf: singular points of the
/// union that are not a transverse crossing of exactly two components,
/// merged with (and checked against) declared points.
template <Scalar K>
std::vector<PointOnConfig<K>>
eta_geometric_points(const CurveConfiguration<K>& cfg,
                     const std::vector<DeclaredPoint<K>>& declared = {}) {
    const K proto = cfg.proto();
    Polynomial<K> zpoly = Polynomial<K>::variable(proj_vars(), "z", proto);
    Polynomial<K> unionC = cfg.product * zpoly;

    std::vector<ProjPoint<K>> candidates = detail::candidate_points(cfg.product);
    for (const auto& d : declared) {
        bool seen = false;
        for (const auto& q : candidates)
            if (q == d.point) { seen = true; break; }
        if (!seen) candidates.push_back(d.point);
    }

    std::vector<PointOnConfig<K>> out;
    for (const auto& pt : candidates) {
        const bool at_inf = pt.at_infinity();
        Polynomial<K> union_local = at_inf ? unionC : cfg.product;
        auto germ = local_germ(union_local, pt);
        if (!germ.f.constant_term().is_zero())
            throw std::invalid_argument("eta_geometric_points: declared point " +
                                        pt.str() + " is not on the configuration");
        SingularityType type = classify_germ(germ.f);
        if (type.tag == SingTag::Smooth) continue;

        PointOnConfig<K> rec{pt, type, {}, ""};
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            if (!eval_at_point(cfg.components[i], pt).is_zero()) continue;
            LocalComponentData<K> lc;
            lc.comp = static_cast<int>(i);
            auto cg = local_germ(cfg.components[i], pt);
            lc.mult = germ_multiplicity(cg.f);
            lc.tangent = detail::germ_tangent(cg.f);
            rec.comps.push_back(std::move(lc));
        }
        if (at_inf) {
            LocalComponentData<K> lz;
            lz.comp = -1;
            auto zg = local_germ(zpoly, pt);
            lz.mult = 1;
            lz.tangent = detail::germ_tangent(zg.f);
            rec.comps.push_back(std::move(lz));
        }

        // transverse crossing of exactly two components: not eta-geometric
        if (type.tag == SingTag::A && type.index == 1 && rec.comps.size() == 2)
            continue;
        if (type.tag == SingTag::Unsupported)
            throw std::runtime_error("eta_geometric_points: unclassifiable point " +
                                     pt.str() + "; declare its type explicitly");
        auto dd = double_direction(germ.f);
        if (!detail::assign_branches(type, rec.comps, dd))
            throw std::runtime_error("eta_geometric_points: branch assignment failed at " +
                                     pt.str());
        rec.label = type.name();
        out.push_back(std::move(rec));
    }

    // verify declarations
    for (const auto& d : declared) {
        const PointOnConfig<K>* found = nullptr;
        for (const auto& rec : out)
            if (rec.point == d.point) { found = &rec; break; }
        if (!found)
            throw std::runtime_error("eta_geometric_points: declared point " + d.name +
                                     " was filtered out (transverse or smooth)");
        if (d.type_name) {
            auto want = parse_type_name(*d.type_name);
            if (!want || found->type.tag != want->first ||
                found->type.index != want->second)
                throw std::runtime_error("eta_geometric_points: declared type " +
                                         *d.type_name + " at " + d.name +
                                         " but classified " + found->type.name());
        }
        for (const auto& cn : d.component_names) {
            bool ok = false;
            for (const auto& lc : found->comps) {
                std::string nm = lc.comp < 0 ? "Linf" : cfg.names[static_cast<std::size_t>(lc.comp)];
                if (nm == cn) { ok = true; break; }
            }
            if (!ok)
                throw std::runtime_error("eta_geometric_points: component " + cn +
                                         " does not pass through " + d.name);
        }
    }
    return out;
}

} // namespace darboux::geometry
