#include <catch2/catch_amalgamated.hpp>

#include "nilq/matrix.hpp"

using namespace nilq;

namespace {

template <class F>
Matrix<F> from_ints(F f, std::vector<std::vector<long long>> rows) {
    Matrix<F> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = f.from_int(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    REQUIRE(f.add(5, 4) == 2);
    REQUIRE(f.sub(2, 5) == 4);
    REQUIRE(f.mul(3, 5) == 1);
    REQUIRE(f.inv(3) == 5);
    REQUIRE(f.from_int(-1) == 6);
    REQUIRE(f.parse("3/5") == f.mul(3, f.inv(5)));
    REQUIRE_THROWS(PrimeField(6));
    REQUIRE_THROWS(f.inv(0));
}

TEST_CASE("rational field arithmetic") {
    Rationals f;
    auto a = f.parse("3/7");
    auto b = f.parse("2/4");
    REQUIRE(f.str(f.add(a, b)) == "13/14");
    REQUIRE(f.str(f.inv(a)) == "7/3");
    REQUIRE_THROWS(f.parse("1/0"));
    REQUIRE_THROWS(f.parse("not-a-number"));
}

TEST_CASE("rank: zero, identity, and a dependent row") {
    Rationals q;
    REQUIRE(Matrix<Rationals>(q, 3, 3).rank() == 0);
    REQUIRE(Matrix<Rationals>::identity(q, 4).rank() == 4);
    // [[1,2],[2,4]] has rank 1
    REQUIRE(from_ints(q, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("kernel_basis sizes and contents") {
    Rationals q;
    REQUIRE(Matrix<Rationals>::identity(q, 2).kernel_basis().empty());
    REQUIRE(Matrix<Rationals>(q, 2, 2).kernel_basis().size() == 2);
    auto ker = from_ints(q, {{1, 1}}).kernel_basis();
    REQUIRE(ker.size() == 1);
    // proportional to (1, -1)
    REQUIRE(q.eq(q.add(ker[0][0], ker[0][1]), q.zero()));
    REQUIRE(!q.is_zero(ker[0][0]));
}

TEST_CASE("solve: identity, inconsistent, diagonal") {
    Rationals q;
    auto id = Matrix<Rationals>::identity(q, 3);
    Vec<Rationals> b{q.from_int(1), q.from_int(2), q.from_int(3)};
    auto x = id.solve(b);
    REQUIRE(x.has_value());
    REQUIRE(*x == b);

    Matrix<Rationals> zero(q, 2, 2);
    REQUIRE(!zero.solve({q.one(), q.zero()}).has_value());

    auto d = from_ints(q, {{2, 0}, {0, 3}});
    auto y = d.solve({q.from_int(4), q.from_int(9)});
    REQUIRE(y.has_value());
    REQUIRE(q.eq((*y)[0], q.from_int(2)));
    REQUIRE(q.eq((*y)[1], q.from_int(3)));
}

TEST_CASE("matrix properties on random inputs") {
    PrimeField f(1000003);
    Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        auto m = Matrix<PrimeField>::random(f, r, c, rng);
        // rank(m) = rank(m^T)
        REQUIRE(m.rank() == m.transpose().rank());
        // cols = rank + |kernel basis|
        REQUIRE(m.cols() == m.rank() + m.kernel_basis().size());
        // m . x = b holds exactly whenever solve returns a value
        auto x = Matrix<PrimeField>::random(f, c, 1, rng);
        Vec<PrimeField> xv(c);
        for (std::size_t i = 0; i < c; ++i) xv[i] = x.at(i, 0);
        Vec<PrimeField> b = m.apply(xv);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        REQUIRE(m.apply(*sol) == b);
        // every kernel vector really is annihilated
        for (const auto& k : m.kernel_basis()) {
            Vec<PrimeField> img = m.apply(k);
            for (const auto& e : img) REQUIRE(f.is_zero(e));
        }
    }
}

TEST_CASE("subspace maintenance") {
    Rationals q;
    Subspace<Rationals> s(q, 3);
    REQUIRE(s.insert({q.from_int(1), q.from_int(2), q.from_int(0)}));
    REQUIRE(s.insert({q.from_int(0), q.from_int(1), q.from_int(1)}));
    REQUIRE(!s.insert({q.from_int(1), q.from_int(3), q.from_int(1)}));  // dependent
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains({q.from_int(2), q.from_int(5), q.from_int(1)}));
    REQUIRE(!s.contains({q.zero(), q.zero(), q.one()}));
    REQUIRE(s.free_columns() == std::vector<std::size_t>{2});
    // coords reconstruct the member
    Vec<Rationals> v{q.from_int(2), q.from_int(5), q.from_int(1)};
    auto coords = s.coords_of(v);
    Vec<Rationals> rebuilt(3, q.zero());
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j)
            rebuilt[j] = q.add(rebuilt[j], q.mul(coords[i], s.basis()[i][j]));
    REQUIRE(rebuilt == v);
}
