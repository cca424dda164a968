#include "qtorus/rng.hpp"

#include <algorithm>

namespace qtorus {

std::uint64_t Rng::mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

long long Rng::range(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
}

mpq_class Rng::rational() {
    long num = static_cast<long>(range(1, 50)) * (flip() ? 1 : -1);
    long den = static_cast<long>(range(1, 50)) * (flip() ? 1 : -1);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpq_class Rng::rational_nonzero() { return rational(); }

mpq_class Rng::rational_noninteger() {
    while (true) {
        mpq_class r = rational();
        if (r.get_den() != 1) return r;
    }
}

GridIndex Rng::index(int window) { return {range(-window, window), range(-window, window)}; }

GridIndex Rng::index_nonzero(int window) {
    while (true) {
        GridIndex n = index(window);
        if (!n.is_zero()) return n;
    }
}

Generator Rng::generator(int window) {
    switch (range(0, 5)) {
        case 0: return Generator::e11(index(window));
        case 1: return Generator::e12(index(window));
        case 2: return Generator::e21(index(window));
        case 3: return Generator::e22(index(window));
        case 4: return Generator::d1();
        default: return Generator::d2();
    }
}

Generator Rng::graded_generator(int window) {
    switch (range(0, 3)) {
        case 0: return Generator::e11(index(window));
        case 1: return Generator::e12(index(window));
        case 2: return Generator::e21(index(window));
        default: return Generator::e22(index(window));
    }
}

Monomial Rng::monomial(int window, int max_vars, long long max_exp,
                       const std::vector<GridIndex>& avoid) {
    Monomial m;
    const long long vars = range(1, max_vars);
    for (long long i = 0; i < vars; ++i) {
        GridIndex n;
        do {
            n = index(window);
        } while (std::find(avoid.begin(), avoid.end(), n) != avoid.end());
        m = m.shifted(n, range(1, max_exp));
    }
    return m;
}

MVector Rng::vector(int window, int max_terms, int max_vars, long long max_exp,
                    const std::vector<GridIndex>& avoid) {
    MVector v;
    const long long terms = range(1, max_terms);
    for (long long i = 0; i < terms; ++i)
        v.add_term(monomial(window, max_vars, max_exp, avoid), Scalar(rational()));
    return v;
}

MVector Rng::vector_in(const ModuleSpace& space, int window, int max_terms, int max_vars,
                       long long max_exp) {
    if (space.kind() == SpaceKind::Plain)
        return vector(window, max_terms, max_vars, max_exp);
    const GridIndex m = space.distinguished();
    MVector v;
    const long long terms = range(1, max_terms);
    for (long long i = 0; i < terms; ++i) {
        Monomial mono = monomial(window, max_vars, max_exp, {m});
        long long e = space.kind() == SpaceKind::QuotientView ? range(-3, -1) : range(-3, 3);
        mono = mono.shifted(m, e);
        v.add_term(mono, Scalar(rational()));
    }
    if (v.is_zero())  // cancellations are possible; retry deterministically
        return vector_in(space, window, max_terms, max_vars, max_exp);
    return v;
}

}  // namespace qtorus
