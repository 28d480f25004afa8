#include "pbf/pbf_core.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbf/rng.hpp"

namespace pbf {

namespace {

std::array<Fe, 3> triple_set_of(const FieldSpec &f, Fe alpha) {
    Fe w = f.omega();
    Fe w2 = f.mul(w, w);
    auto elem = [&](Fe a) { return f.add(a, f.inv(a)); };
    std::array<Fe, 3> t = {elem(alpha), elem(f.mul(w, alpha)), elem(f.mul(w2, alpha))};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

ConstraintSystem build_constraints(const FieldSpec &field) {
    if (field.n() < 6)
        throw std::invalid_argument("build_constraints: needs n >= 6 so GF(4) is a proper subfield "
                                    "with elements outside it beyond GF(2)");
    const std::size_t size = field.size();

    ConstraintSystem cs{field, {}, {}, {}};
    for (uint32_t x = 2; x < size; x += 2)
        cs.l1.emplace_back(Fe{x}, Fe{x | 1u});

    Fe w = field.omega();
    Fe w2 = field.mul(w, w);
    std::vector<std::array<Fe, 3>> triples;
    for (uint32_t a = 2; a < size; ++a) {
        if (a == w.v || a == w2.v) continue; // skip GF(4) \ GF(2)
        triples.push_back(triple_set_of(field, Fe{a}));
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    cs.l2 = std::move(triples);

    if (cs.l1.size() != size / 2 - 1 || cs.l2.size() != (size / 2 - 2) / 3)
        throw std::logic_error("build_constraints: unexpected row counts");
    for (const auto &t : cs.l2)
        if ((t[0].v ^ t[1].v ^ t[2].v) != 0 || t[0].v < 2)
            throw std::logic_error("build_constraints: malformed triple set");

    cs.m = BitMatrix(cs.l1.size() + cs.l2.size(), size - 2);
    std::size_t r = 0;
    for (const auto &p : cs.l1) {
        cs.m.set(r, p.first.v - 2, true);
        cs.m.set(r, p.second.v - 2, true);
        ++r;
    }
    for (const auto &t : cs.l2) {
        for (Fe e : t) cs.m.set(r, e.v - 2, true);
        ++r;
    }
    return cs;
}

USet enumerate_U(const FieldSpec &field) {
    USet u{field, {}};
    Fe w = field.omega();
    for (uint32_t yv = 2; yv < field.size(); ++yv) {
        Fe y{yv};
        // x = (z + w)/y turns the quadratic into z^2 + z = 1/(y+1).
        Fe c = field.inv(Fe{yv ^ 1u});
        auto roots = field.solve_artin_schreier(c);
        if (!roots) continue;
        Fe inv_y = field.inv(y);
        for (Fe z : {roots->first, roots->second}) {
            Fe x = field.mul(field.add(z, w), inv_y);
            u.pairs.push_back(UPair{x, y, field.inv(x)});
        }
    }
    return u;
}

bool is_pbf_direct(const BooleanFunction &f, const USet &u) {
    if (f.field() != u.field)
        throw std::invalid_argument("is_pbf_direct: field spec mismatch");
    const BitVector &tt = f.tt();
    for (std::size_t x = 0; x < tt.size(); x += 2)
        if (tt.get(x) != tt.get(x + 1)) return false;
    const int f0 = tt.get(0);
    for (const UPair &p : u.pairs) {
        int s = tt.get(p.inv_x.v) ^ tt.get(p.inv_x.v ^ p.y.v) ^ f0 ^ tt.get(p.y.v);
        if (s) return false;
    }
    return true;
}

namespace {

// Restriction of f + f(0) to the matrix columns, or nullopt if f(0) != f(1).
std::optional<BitVector> restricted_value_vector(const BooleanFunction &f) {
    const BitVector &tt = f.tt();
    if (tt.get(0) != tt.get(1)) return std::nullopt;
    BitVector g = tt;
    if (tt.get(0)) {
        for (std::size_t i = 0; i < g.word_count(); ++i) g.words()[i] = ~g.words()[i];
        // size is a power of two >= 16, so no tail mask is needed
    }
    return g.slice(2, tt.size() - 2);
}

} // namespace

bool is_pbf_matrix(const BooleanFunction &f, const ConstraintSystem &cs) {
    if (f.field() != cs.field)
        throw std::invalid_argument("is_pbf_matrix: field spec mismatch");
    auto g = restricted_value_vector(f);
    if (!g) return false;
    return !mat_vec(cs.m, *g).any();
}

std::optional<std::string> pbf_violation(const BooleanFunction &f, const ConstraintSystem &cs) {
    if (f.field() != cs.field)
        throw std::invalid_argument("pbf_violation: field spec mismatch");
    auto g = restricted_value_vector(f);
    if (!g) return "f(0) != f(1)";
    BitVector r = mat_vec(cs.m, *g);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!r.get(i)) continue;
        const FieldSpec &fd = cs.field;
        if (i < cs.l1.size()) {
            const auto &p = cs.l1[i];
            return "row " + std::to_string(i) + ": pair {" + fd.element_hex(p.first) + ", " +
                   fd.element_hex(p.second) + "} has odd parity";
        }
        const auto &t = cs.l2[i - cs.l1.size()];
        return "row " + std::to_string(i) + ": triple set {" + fd.element_hex(t[0]) + ", " +
               fd.element_hex(t[1]) + ", " + fd.element_hex(t[2]) + "} has odd parity";
    }
    return std::nullopt;
}

PbfSpace pbf_space(const ConstraintSystem &cs) {
    BitMatrix ns = nullspace_basis(cs.m);
    const std::size_t size = cs.field.size();

    PbfSpace space{cs.field, BitMatrix(ns.rows() + 1, size), ns.rows() + 1};
    for (std::size_t r = 0; r < ns.rows(); ++r)
        for (std::size_t c = 0; c < ns.cols(); ++c)
            if (ns.get(r, c)) space.basis.set(r, c + 2, true);
    for (std::size_t c = 0; c < size; ++c) space.basis.set(ns.rows(), c, true);
    return space;
}

BooleanFunction combine_basis(const PbfSpace &space, const std::vector<uint64_t> &mask_words) {
    BitVector tt(space.field.size());
    for (std::size_t r = 0; r < space.dim; ++r) {
        if (r / 64 >= mask_words.size()) break;
        if ((mask_words[r / 64] >> (r % 64)) & 1u) {
            const uint64_t *row = space.basis.row(r);
            for (std::size_t i = 0; i < tt.word_count(); ++i) tt.words()[i] ^= row[i];
        }
    }
    return BooleanFunction(space.field, tt);
}

BooleanFunction sample_pbf(const PbfSpace &space, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<uint64_t> mask((space.dim + 63) / 64);
    for (auto &w : mask) w = rng.next();
    return combine_basis(space, mask);
}

VectorialFunction lift_pbf_to_pf(const BooleanFunction &f, const USet &u, uint64_t seed) {
    if (!is_pbf_direct(f, u))
        throw std::invalid_argument("lift_pbf_to_pf: input is not a preferred Boolean function");
    const FieldSpec &field = f.field();
    const uint32_t mask = static_cast<uint32_t>(field.size() - 1);
    const uint32_t c = field.trace_one_element().v;

    SplitMix64 rng(seed);
    VectorialFunction r{field, std::vector<uint32_t>(field.size())};
    for (std::size_t x = 0; x < field.size(); x += 2) {
        uint32_t rx = static_cast<uint32_t>(rng.next()) & mask;
        r.lut[x] = rx;
        r.lut[x + 1] = f(Fe{static_cast<uint32_t>(x)}) ? (rx ^ c) : rx;
    }
    return r;
}

CountingRecord counting_formulas(unsigned n) {
    if (n % 2 != 0 || n < 4 || n > 40)
        throw std::invalid_argument("counting_formulas: n must be even and in [4, 40]");
    const int64_t pw = int64_t(1) << n;
    CountingRecord rec{};
    rec.n = n;
    rec.log2_pf_per_pbf = int64_t(n) * pw - pw / 2;
    rec.log2_ccz_lower = (pw + 2) / 3 - 4 * int64_t(n) * n - 2 * n;
    rec.nl_lower = pw / 4 - (int64_t(1) << (n / 2 + 1)) / 4 - 1;
    rec.expected_rank = (2 * pw - 5) / 3;
    rec.dim_pf = int64_t(n) * pw + pw / 2 - 1 - rec.expected_rank;
    return rec;
}

} // namespace pbf
