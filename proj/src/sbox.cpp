#include "pbf/sbox.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "pbf/parallel.hpp"
#include "pbf/rng.hpp"

namespace pbf {

VectorialFunction construct_g(const BooleanFunction &f, const USet &u) {
    if (!is_pbf_direct(f, u))
        throw std::invalid_argument("construct_g: input is not a preferred Boolean function");
    const FieldSpec &field = f.field();
    VectorialFunction g{field, std::vector<uint32_t>(field.size())};
    for (uint32_t a = 0; a < field.size(); ++a) {
        Fe ia = field.inv(Fe{a});
        g.lut[a] = ia.v ^ static_cast<uint32_t>(f(ia));
    }
    return g;
}

VectorialFunction inverse_function(const FieldSpec &field) {
    VectorialFunction g{field, std::vector<uint32_t>(field.size())};
    for (uint32_t a = 0; a < field.size(); ++a) g.lut[a] = field.inv(Fe{a}).v;
    return g;
}

bool is_permutation(const VectorialFunction &F) {
    std::vector<uint8_t> seen(F.lut.size(), 0);
    for (uint32_t y : F.lut) {
        if (y >= F.lut.size() || seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

DdtSummary ddt(const VectorialFunction &F) {
    const std::size_t size = F.lut.size();
    DdtSummary out;
    std::vector<uint32_t> row(size);
    std::vector<uint64_t> by_value(size + 1, 0);
    for (std::size_t a = 1; a < size; ++a) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t x = 0; x < size; ++x) ++row[F.lut[x] ^ F.lut[x ^ a]];
        for (uint32_t c : row) {
            ++by_value[c];
            if (c > out.max) out.max = c;
        }
    }
    for (uint32_t v = 0; v <= size; ++v)
        if (by_value[v]) out.spectrum[v] = by_value[v];
    return out;
}

namespace {

void fwht(std::vector<int32_t> &a) {
    const std::size_t n = a.size();
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += len << 1)
            for (std::size_t j = i; j < i + len; ++j) {
                int32_t u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
}

// Mask m(b) with tr(b*y) = parity(m(b) & y); linear in y for fixed b.
uint32_t component_mask(const FieldSpec &field, Fe b) {
    uint32_t m = 0;
    for (unsigned j = 0; j < field.n(); ++j)
        if (field.trace(field.mul(b, Fe{uint32_t(1) << j}))) m |= uint32_t(1) << j;
    return m;
}

} // namespace

WalshSummary walsh(const VectorialFunction &F) {
    const FieldSpec &field = F.field;
    const std::size_t size = F.lut.size();
    WalshSummary out;
    std::vector<uint64_t> by_abs(size + 1, 0);
    std::vector<int32_t> sign(size);
    for (uint32_t b = 1; b < size; ++b) {
        uint32_t m = component_mask(field, Fe{b});
        for (std::size_t x = 0; x < size; ++x)
            sign[x] = __builtin_parity(m & F.lut[x]) ? -1 : 1;
        fwht(sign);
        for (int32_t w : sign) {
            uint32_t a = static_cast<uint32_t>(w < 0 ? -w : w);
            ++by_abs[a];
            if (a > out.max_abs) out.max_abs = a;
        }
    }
    for (uint32_t v = 0; v <= size; ++v)
        if (by_abs[v]) out.extended_spectrum[v] = by_abs[v];
    out.nonlinearity = static_cast<int64_t>(size / 2) - out.max_abs / 2;
    return out;
}

int algebraic_degree(const VectorialFunction &F) {
    const FieldSpec &field = F.field;
    int deg = -1;
    for (unsigned j = 0; j < field.n(); ++j) {
        BitVector tt(field.size());
        for (std::size_t x = 0; x < field.size(); ++x)
            if ((F.lut[x] >> j) & 1u) tt.set(x, true);
        mobius_transform(tt);
        int d = anf_degree(tt);
        if (d > deg) deg = d;
    }
    return deg;
}

uint64_t CczInvariants::fingerprint() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(0xd1f);
    for (const auto &[k, v] : differential_spectrum) {
        mix(k);
        mix(v);
    }
    mix(0x3a15);
    for (const auto &[k, v] : extended_walsh_spectrum) {
        mix(k);
        mix(v);
    }
    mix(static_cast<uint64_t>(degree));
    return h;
}

CczInvariants ccz_invariants(const VectorialFunction &F) {
    CczInvariants inv;
    inv.differential_spectrum = ddt(F).spectrum;
    inv.extended_walsh_spectrum = walsh(F).extended_spectrum;
    inv.degree = algebraic_degree(F);
    return inv;
}

SurveyResult nl_survey(const PbfSpace &space, std::size_t count, uint64_t seed, bool details,
                       unsigned threads) {
    SurveyResult res;
    res.rows.resize(count);
    if (count == 0) return res;

    const USet u = enumerate_U(space.field);
    parallel_for(count, threads, [&](std::size_t i) {
        BooleanFunction f = sample_pbf(space, mix_seed(seed, i));
        VectorialFunction g = construct_g(f, u);
        SurveyRow row;
        row.permutation = is_permutation(g);
        row.nl = walsh(g).nonlinearity;
        if (details) {
            row.delta = ddt(g).max;
            row.degree = algebraic_degree(g);
        }
        res.rows[i] = row;
    });

    int64_t sum = 0;
    for (const auto &r : res.rows) {
        sum += r.nl;
        ++res.histogram[r.nl];
    }
    res.average_nl = static_cast<double>(sum) / static_cast<double>(count);
    double sq = 0.0;
    for (const auto &r : res.rows) {
        double d = static_cast<double>(r.nl) - res.average_nl;
        sq += d * d;
    }
    res.var_nl = std::sqrt(sq / static_cast<double>(count));
    return res;
}

std::string histogram_compact(const std::map<int64_t, uint64_t> &hist) {
    std::string s;
    for (const auto &[nl, cnt] : hist) {
        if (!s.empty()) s += ", ";
        s += std::to_string(nl) + "^" + std::to_string(cnt);
    }
    return s;
}

} // namespace pbf
