#include "segre/gf.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

using segre::Fe;
using segre::Field;

namespace {

const std::uint32_t kSmallOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81};

/* ---- independent oracle: modulus selection --------------------------- */

// Reference polynomial arithmetic over GF(p), written from scratch so the
// modulus oracle does not share code with the library. Coefficients
// ascending, always trimmed.
std::vector<std::uint32_t> oracle_mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b, std::uint32_t p) {
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> decode_monic(std::uint32_t code, std::uint32_t p, std::uint32_t deg) {
    std::vector<std::uint32_t> f(deg + 1, 0);
    f[deg] = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
        f[i] = code % p;
        code /= p;
    }
    return f;
}

std::uint32_t monic_code(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = f.size() - 1; i-- > 0;) code = code * p + f[i];
    return code;
}

// Sieve: mark every monic degree-n polynomial that arises as a product of
// two smaller monic factors; the lex-least unmarked one is the expected
// modulus. Irreducibility is decided by multiplication only, never by
// division, so this cannot mirror a library bug.
std::vector<std::uint32_t> expected_modulus(std::uint32_t p, std::uint32_t n) {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    std::vector<bool> reducible(q, false);
    for (std::uint32_t da = 1; da < n; ++da) {
        const std::uint32_t db = n - da;
        if (da > db) break;
        std::uint32_t ca_total = 1, cb_total = 1;
        for (std::uint32_t i = 0; i < da; ++i) ca_total *= p;
        for (std::uint32_t i = 0; i < db; ++i) cb_total *= p;
        for (std::uint32_t ca = 0; ca < ca_total; ++ca) {
            const auto fa = decode_monic(ca, p, da);
            for (std::uint32_t cb = 0; cb < cb_total; ++cb) {
                const auto prod = oracle_mul(fa, decode_monic(cb, p, db), p);
                reducible[monic_code(prod, p)] = true;
            }
        }
    }
    for (std::uint32_t code = 0; code < q; ++code) {
        if (!reducible[code]) return decode_monic(code, p, n);
    }
    ADD_FAILURE() << "oracle found no irreducible of degree " << n << " over GF(" << p << ")";
    return {};
}

TEST(FieldConstruction, ModulusMatchesSieveOracle) {
    for (std::uint32_t q : kSmallOrders) {
        Field F(q);
        if (F.n() == 1) {
            EXPECT_EQ(F.modulus(), (std::vector<std::uint32_t>{0, 1})) << "q=" << q;
        } else {
            EXPECT_EQ(F.modulus(), expected_modulus(F.p(), F.n())) << "q=" << q;
        }
    }
}

TEST(FieldConstruction, KnownModuli) {
    // Hand-checked lex-least irreducibles.
    EXPECT_EQ(Field(4).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));   // t^2+t+1
    EXPECT_EQ(Field(8).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));  // t^3+t+1
    EXPECT_EQ(Field(9).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));   // t^2+1
    EXPECT_EQ(Field(27).modulus(), (std::vector<std::uint32_t>{1, 2, 0, 1}));  // t^3+2t+1
}

TEST(FieldConstruction, ParametersAndElements) {
    Field F(81);
    EXPECT_EQ(F.p(), 3u);
    EXPECT_EQ(F.n(), 4u);
    EXPECT_EQ(F.q(), 81u);
    const auto elems = F.elements();
    ASSERT_EQ(elems.size(), 81u);
    for (std::uint32_t c = 0; c < 81; ++c) EXPECT_EQ(elems[c].code, c);
    EXPECT_EQ(F.element(80).code, 80u);
    EXPECT_THROW(F.element(81), std::invalid_argument);
}

TEST(FieldConstruction, RejectsNonPrimePowers) {
    EXPECT_THROW(Field(0), segre::NotPrimePower);
    EXPECT_THROW(Field(1), segre::NotPrimePower);
    EXPECT_THROW(Field(6), segre::NotPrimePower);
    EXPECT_THROW(Field(12), segre::NotPrimePower);
    EXPECT_THROW(Field(100), segre::NotPrimePower);  // 2^2 * 5^2
}

TEST(FieldConstruction, OrderCap) {
    EXPECT_THROW(Field(1u << 17), segre::UnsupportedOrder);
    EXPECT_THROW(Field(32, 16), segre::UnsupportedOrder);
    EXPECT_NO_THROW(Field(32, 32));
}

TEST(FieldConstruction, EqualOrderMeansEqualField) {
    Field a(9), b(9), c(7);
    EXPECT_TRUE(a == b);
    EXPECT_FALSE(a == c);
}

/* ---- field axioms, exhaustive at desk scale --------------------------- */

TEST(FieldAxioms, Exhaustive) {
    for (std::uint32_t q : kSmallOrders) {
        Field F(q);
        const Fe zero = F.zero(), one = F.one();
        for (std::uint32_t i = 0; i < q; ++i) {
            const Fe a = F.element(i);
            EXPECT_EQ(F.add(a, zero), a);
            EXPECT_EQ(F.mul(a, one), a);
            EXPECT_EQ(F.mul(a, zero), zero);
            EXPECT_EQ(F.add(a, F.neg(a)), zero);
            EXPECT_EQ(F.sub(a, a), zero);
            if (i != 0) {
                EXPECT_EQ(F.mul(a, F.inv(a)), one);
                EXPECT_EQ(F.div(a, a), one);
                EXPECT_EQ(F.inv(F.inv(a)), a);
            }
            for (std::uint32_t j = 0; j < q; ++j) {
                const Fe b = F.element(j);
                EXPECT_EQ(F.add(a, b), F.add(b, a));
                EXPECT_EQ(F.mul(a, b), F.mul(b, a));
                EXPECT_EQ(F.sub(a, b), F.add(a, F.neg(b)));
                if (j != 0) EXPECT_EQ(F.mul(F.div(a, b), b), a);
            }
        }
    }
}

TEST(FieldAxioms, AssociativityAndDistributivity) {
    // Ternary loops kept to a handful of orders; the arithmetic core is the
    // same for all table-backed fields.
    for (std::uint32_t q : {4u, 5u, 9u, 27u}) {
        Field F(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            const Fe a = F.element(i);
            for (std::uint32_t j = 0; j < q; ++j) {
                const Fe b = F.element(j);
                for (std::uint32_t k = 0; k < q; ++k) {
                    const Fe c = F.element(k);
                    ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
                    ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
                    ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST(FieldAxioms, Characteristic) {
    for (std::uint32_t q : kSmallOrders) {
        Field F(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            Fe acc = F.zero();
            for (std::uint32_t k = 0; k < F.p(); ++k) acc = F.add(acc, F.element(i));
            EXPECT_EQ(acc, F.zero()) << "q=" << q << " i=" << i;
        }
    }
}

/* ---- frozen arithmetic values ----------------------------------------- */

TEST(FieldValues, PrimeFieldByHand) {
    Field F(7);
    EXPECT_EQ(F.mul(F.element(3), F.element(5)), F.element(1));  // 15 = 2*7+1
    EXPECT_EQ(F.inv(F.element(3)), F.element(5));
    EXPECT_EQ(F.add(F.element(4), F.element(5)), F.element(2));
    EXPECT_EQ(F.neg(F.element(2)), F.element(5));
    EXPECT_EQ(F.minus_one(), F.element(6));
}

TEST(FieldValues, ExtensionFieldByHand) {
    // GF(9) with modulus t^2+1: code 3 is t, and t*t = -1 = 2.
    Field F(9);
    EXPECT_EQ(F.mul(F.element(3), F.element(3)), F.element(2));
    // (1+t)(1+t) = 1 + 2t + t^2 = 2t, code 6.
    EXPECT_EQ(F.mul(F.element(4), F.element(4)), F.element(6));
    // (1+t)(2+t) = 2 + 3t + t^2 = 1, so they are inverse to each other.
    EXPECT_EQ(F.mul(F.element(4), F.element(5)), F.one());
    EXPECT_EQ(F.inv(F.element(4)), F.element(5));
    // Addition is coefficientwise: (2+t) + (1+2t) = 0.
    EXPECT_EQ(F.add(F.element(5), F.element(7)), F.zero());
    EXPECT_EQ(F.minus_one(), F.element(2));
}

TEST(FieldValues, FromInt) {
    Field F(7);
    EXPECT_EQ(F.from_int(0), F.zero());
    EXPECT_EQ(F.from_int(10), F.element(3));
    EXPECT_EQ(F.from_int(-1), F.element(6));
    EXPECT_EQ(F.from_int(-13), F.element(1));
    // In an extension the image lands in the prime subfield.
    Field G(9);
    EXPECT_EQ(G.from_int(-1), G.element(2));
    EXPECT_EQ(G.from_int(5), G.element(2));
}

TEST(FieldValues, DivisionByZeroThrows) {
    Field F(5);
    EXPECT_THROW(F.inv(F.zero()), segre::DivisionByZero);
    EXPECT_THROW(F.div(F.one(), F.zero()), segre::DivisionByZero);
}

/* ---- pow, power sums, unit product ------------------------------------ */

TEST(FieldPow, Conventions) {
    Field F(9);
    EXPECT_EQ(F.pow(F.zero(), 0), F.one());  // 0^0 = 1 by convention
    EXPECT_EQ(F.pow(F.zero(), 5), F.zero());
    EXPECT_EQ(F.pow(F.element(3), 2), F.element(2));
}

TEST(FieldPow, MatchesRepeatedMultiplication) {
    for (std::uint32_t q : {7u, 9u, 16u}) {
        Field F(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            const Fe a = F.element(i);
            Fe acc = F.one();
            for (std::uint64_t e = 0; e <= 2 * q; ++e) {
                EXPECT_EQ(F.pow(a, e), acc) << "q=" << q << " a=" << i << " e=" << e;
                acc = F.mul(acc, a);
            }
        }
    }
}

TEST(FieldPow, FermatAndFrobenius) {
    for (std::uint32_t q : kSmallOrders) {
        Field F(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            const Fe a = F.element(i);
            EXPECT_EQ(F.pow(a, q), a);
            if (i != 0) EXPECT_EQ(F.pow(a, q - 1), F.one());
        }
    }
}

TEST(FieldSums, PowerSumVanishesBelowQMinusOne) {
    for (std::uint32_t q : kSmallOrders) {
        Field F(q);
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            EXPECT_EQ(F.power_sum(i), F.zero()) << "q=" << q << " i=" << i;
        }
        EXPECT_EQ(F.power_sum(q - 1), F.minus_one()) << "q=" << q;
        // Multiples of q-1 keep the value -1; in between it drops back to 0.
        EXPECT_EQ(F.power_sum(2 * (q - 1)), F.minus_one()) << "q=" << q;
        if (q > 2) EXPECT_EQ(F.power_sum(q), F.zero()) << "q=" << q;
    }
}

TEST(FieldSums, NonzeroProductIsMinusOne) {
    for (std::uint32_t q : kSmallOrders) {
        Field F(q);
        EXPECT_EQ(F.nonzero_product(), F.minus_one()) << "q=" << q;
    }
    // Frozen codes: -1 sits in the prime subfield, so its code is p-1.
    EXPECT_EQ(Field(9).nonzero_product().code, 2u);
    EXPECT_EQ(Field(8).nonzero_product().code, 1u);  // characteristic 2: -1 = 1
    EXPECT_EQ(Field(7).nonzero_product().code, 6u);
}

TEST(FieldSums, NonzeroProductBruteForceOracle) {
    // Independent rebuild of the GF(9) product: multiply the 8 unit codes
    // with pencil-and-paper polynomial arithmetic mod t^2+1 (a,b) = a+bt.
    std::uint32_t a = 1, b = 0;
    for (std::uint32_t code = 1; code < 9; ++code) {
        const std::uint32_t c = code % 3, d = code / 3;
        const std::uint32_t ra = ((a * c) % 3 + 2 * ((b * d) % 3)) % 3;  // ac - bd
        const std::uint32_t rb = ((a * d) % 3 + (b * c) % 3) % 3;        // ad + bc
        a = ra;
        b = rb;
    }
    EXPECT_EQ(a, 2u);
    EXPECT_EQ(b, 0u);
    EXPECT_EQ(Field(9).nonzero_product().code, a + 3 * b);
}

/* ---- the big-order path (no lookup tables) ----------------------------- */

TEST(FieldLarge, SlowPathAxiomsSampled) {
    Field F(2048);  // 2^11, above the table cutoff
    EXPECT_EQ(F.p(), 2u);
    EXPECT_EQ(F.n(), 11u);
    ASSERT_EQ(F.modulus().size(), 12u);
    EXPECT_EQ(F.modulus().back(), 1u);

    const std::vector<std::uint32_t> sample = {0, 1, 2, 3, 5, 17, 100, 511, 1024, 1337, 2047};
    for (std::uint32_t i : sample) {
        const Fe a = F.element(i);
        EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
        if (i != 0) {
            EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
            EXPECT_EQ(F.pow(a, 2047), F.one());
        }
        for (std::uint32_t j : sample) {
            const Fe b = F.element(j);
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            for (std::uint32_t k : sample) {
                const Fe c = F.element(k);
                ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
                ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
            }
        }
    }
}

TEST(FieldLarge, OddCharacteristicSlowPath) {
    Field F(1331);  // 11^3, above the table cutoff
    EXPECT_EQ(F.p(), 11u);
    EXPECT_EQ(F.n(), 3u);

    // Degree-3 irreducibility over GF(11) is just root-freeness, which makes
    // the lex-least check easy to replay: every smaller candidate must have
    // a root and the chosen modulus must not.
    const auto& m = F.modulus();
    ASSERT_EQ(m.size(), 4u);
    auto eval = [&](std::uint32_t code, std::uint32_t x) {
        const std::uint32_t c0 = code % 11, c1 = (code / 11) % 11, c2 = (code / 121) % 11;
        return (c0 + c1 * x + c2 * x * x + x * x * x) % 11;
    };
    const std::uint32_t chosen = m[0] + 11 * m[1] + 121 * m[2];
    for (std::uint32_t x = 0; x < 11; ++x) EXPECT_NE(eval(chosen, x), 0u);
    for (std::uint32_t code = 0; code < chosen; ++code) {
        bool has_root = false;
        for (std::uint32_t x = 0; x < 11 && !has_root; ++x) has_root = eval(code, x) == 0;
        EXPECT_TRUE(has_root) << "candidate " << code << " skipped but irreducible";
    }

    const std::vector<std::uint32_t> sample = {0, 1, 2, 10, 11, 121, 700, 1330};
    for (std::uint32_t i : sample) {
        const Fe a = F.element(i);
        EXPECT_EQ(F.sub(a, a), F.zero());
        if (i != 0) EXPECT_EQ(F.div(a, a), F.one());
        for (std::uint32_t j : sample) {
            if (j == 0) continue;
            const Fe b = F.element(j);
            EXPECT_EQ(F.mul(F.div(a, b), b), a);
        }
    }
    EXPECT_EQ(F.pow(F.element(1330), 1331), F.element(1330));
}

}  // namespace
