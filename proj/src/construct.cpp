#include "ringlab/ring.hpp"

#include <cstdlib>
#include <sstream>

namespace ringlab {

namespace {

using Kind = ConstructSpec::Kind;

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& s) : s(s) {}

    [[noreturn]] void fail(const std::string& why) {
        throw Error(Err::UnsupportedSpec, why + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
    }

    bool eat(const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    int integer() {
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::atoi(s.substr(start, pos - start).c_str());
    }

    ConstructSpecPtr spec() {
        auto node = std::make_shared<ConstructSpec>();
        if (eat("zn:")) {
            node->kind = Kind::Zn;
            node->n = integer();
        } else if (eat("z")) {
            node->kind = Kind::Zn;
            node->n = integer();
        } else if (eat("prod:(")) {
            node->kind = Kind::Product;
            node->a = spec();
            if (!eat(",")) fail("expected ','");
            node->b = spec();
            if (!eat(")")) fail("expected ')'");
        } else if (eat("row_ring:")) {
            node->kind = Kind::RowRing;
            node->n = 2;
            node->a = spec();
        } else if (eat("mat")) {
            node->kind = Kind::Matrix;
            node->n = integer();
            if (!eat(":")) fail("expected ':'");
            node->a = spec();
        } else if (eat("ut")) {
            node->kind = Kind::UpperTriangular;
            node->n = integer();
            if (!eat(":")) fail("expected ':'");
            node->a = spec();
        } else if (eat("su")) {
            node->kind = Kind::StrictlyUpper;
            node->n = integer();
            if (!eat(":")) fail("expected ':'");
            node->a = spec();
        } else {
            fail("unknown constructor");
        }
        return node;
    }
};

// Matrix-shaped rings share one builder: a list of stored positions within a
// k x k matrix over a base ring. Stored entries encode big-endian mixed
// radix: the first position in row-major order is the most significant
// digit.
struct MatrixShape {
    int k;
    std::vector<std::pair<int, int>> positions;
};

RingPtr build_matrix_ring(const std::string& name, const RingPtr& base, const MatrixShape& shape,
                          int max_order) {
    int m = static_cast<int>(shape.positions.size());
    long long order = 1;
    for (int i = 0; i < m; ++i) {
        order *= base->n;
        if (order > max_order)
            throw Error(Err::OrderLimitExceeded,
                        name + " would have order above the cap " + std::to_string(max_order));
    }
    int n = static_cast<int>(order);
    int k = shape.k;
    std::vector<int> stored(k * k, -1);
    for (int i = 0; i < m; ++i)
        stored[shape.positions[i].first * k + shape.positions[i].second] = i;

    auto decode = [&](int idx, std::vector<int>& entries) {
        for (int i = m - 1; i >= 0; --i) {
            entries[i] = idx % base->n;
            idx /= base->n;
        }
    };
    auto encode = [&](const std::vector<int>& entries) {
        long long idx = 0;
        for (int i = 0; i < m; ++i) idx = idx * base->n + entries[i];
        return static_cast<int>(idx);
    };

    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    std::vector<int> ea(m), eb(m), ec(m);
    std::vector<int> full_a(k * k, 0), full_b(k * k, 0);
    for (int a = 0; a < n; ++a) {
        decode(a, ea);
        for (int b = 0; b < n; ++b) {
            decode(b, eb);
            for (int i = 0; i < m; ++i) ec[i] = base->plus(ea[i], eb[i]);
            add[a][b] = encode(ec);

            for (int i = 0; i < k * k; ++i) full_a[i] = full_b[i] = 0;
            for (int i = 0; i < m; ++i) {
                full_a[shape.positions[i].first * k + shape.positions[i].second] = ea[i];
                full_b[shape.positions[i].first * k + shape.positions[i].second] = eb[i];
            }
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    int acc = 0;
                    for (int t = 0; t < k; ++t)
                        acc = base->plus(acc, base->times(full_a[r * k + t], full_b[t * k + c]));
                    int slot = stored[r * k + c];
                    if (slot >= 0) {
                        ec[slot] = acc;
                    } else if (acc != 0) {
                        throw Error(Err::UnsupportedSpec,
                                    name + ": product escapes the stored matrix shape");
                    }
                }
            mul[a][b] = encode(ec);
        }
    }
    return FiniteRing::from_tables(name, add, mul);
}

} // namespace

std::string ConstructSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Zn: os << "zn:" << n; break;
        case Kind::Product: os << "prod:(" << a->to_string() << "," << b->to_string() << ")"; break;
        case Kind::Matrix: os << "mat" << n << ":" << a->to_string(); break;
        case Kind::UpperTriangular: os << "ut" << n << ":" << a->to_string(); break;
        case Kind::StrictlyUpper: os << "su" << n << ":" << a->to_string(); break;
        case Kind::RowRing: os << "row_ring:" << a->to_string(); break;
    }
    return os.str();
}

ConstructSpecPtr ConstructSpec::parse(const std::string& text) {
    Parser p(text);
    ConstructSpecPtr spec = p.spec();
    if (p.pos != text.size()) p.fail("trailing input");
    return spec;
}

int default_max_order(int fallback) {
    if (const char* env = std::getenv("RINGLAB_MAX_ORDER")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

RingPtr construct(const ConstructSpec& spec, int max_order) {
    std::string name = spec.to_string();
    switch (spec.kind) {
        case Kind::Zn: {
            int n = spec.n;
            if (n < 1) throw Error(Err::UnsupportedSpec, "zn needs n >= 1");
            if (n > max_order)
                throw Error(Err::OrderLimitExceeded,
                            name + " exceeds the order cap " + std::to_string(max_order));
            std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    add[i][j] = (i + j) % n;
                    mul[i][j] = (i * j) % n;
                }
            return FiniteRing::from_tables(name, add, mul);
        }
        case Kind::Product: {
            RingPtr a = construct(*spec.a, max_order);
            RingPtr b = construct(*spec.b, max_order);
            long long order = static_cast<long long>(a->n) * b->n;
            if (order > max_order)
                throw Error(Err::OrderLimitExceeded,
                            name + " exceeds the order cap " + std::to_string(max_order));
            int n = static_cast<int>(order);
            std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
            for (int i = 0; i < n; ++i) {
                int ia = i / b->n, ib = i % b->n;
                for (int j = 0; j < n; ++j) {
                    int ja = j / b->n, jb = j % b->n;
                    add[i][j] = a->plus(ia, ja) * b->n + b->plus(ib, jb);
                    mul[i][j] = a->times(ia, ja) * b->n + b->times(ib, jb);
                }
            }
            return FiniteRing::from_tables(name, add, mul);
        }
        case Kind::Matrix:
        case Kind::UpperTriangular:
        case Kind::StrictlyUpper:
        case Kind::RowRing: {
            RingPtr base = construct(*spec.a, max_order);
            MatrixShape shape;
            if (spec.kind == Kind::RowRing) {
                shape.k = 2;
                shape.positions = {{0, 0}, {0, 1}};
            } else {
                shape.k = spec.n;
                if (shape.k < 1) throw Error(Err::UnsupportedSpec, "matrix dimension must be >= 1");
                for (int r = 0; r < shape.k; ++r)
                    for (int c = 0; c < shape.k; ++c) {
                        if (spec.kind == Kind::Matrix ||
                            (spec.kind == Kind::UpperTriangular && r <= c) ||
                            (spec.kind == Kind::StrictlyUpper && r < c))
                            shape.positions.emplace_back(r, c);
                    }
            }
            return build_matrix_ring(name, base, shape, max_order);
        }
    }
    throw Error(Err::UnsupportedSpec, "unhandled constructor");
}

RingPtr construct(const std::string& shorthand, int max_order) {
    return construct(*ConstructSpec::parse(shorthand), max_order);
}

} // namespace ringlab
