#include "domcert/polytope.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

namespace domcert {

namespace {

AlgebraicNumber zero_of(const FieldPtr &f) { return AlgebraicNumber::from_rational(f, 0); }
AlgebraicNumber one_of(const FieldPtr &f) { return AlgebraicNumber::from_rational(f, 1); }

// strict total order on representations (not on values); used only for dedup
bool coeff_less(const AlgVector &a, const AlgVector &b) {
    for (size_t i = 0; i < a.size(); i++) {
        const auto &ca = a[i].coeffs(), &cb = b[i].coeffs();
        for (size_t k = 0; k < ca.size(); k++) {
            int c = cmp(ca[k], cb[k]);
            if (c) return c < 0;
        }
    }
    return false;
}
struct CoeffLess {
    bool operator()(const AlgVector &a, const AlgVector &b) const { return coeff_less(a, b); }
};

using View = std::vector<const AlgVector *>;

Membership member_view(const View &X, const AlgVector &point);

}  // namespace

bool alg_vector_eq(const AlgVector &a, const AlgVector &b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (a[i].coeffs() != b[i].coeffs()) return false;
    return true;
}

bool alg_vector_le(const AlgVector &a, const AlgVector &b) {
    for (size_t i = 0; i < a.size(); i++)
        if ((b[i] - a[i]).sign() < 0) return false;
    return true;
}

namespace {

// Phase-1 simplex for { lambda >= 0, sum lambda = 1, sum lambda_j X_j - s = point }.
// Artificial variables start basic and are dropped once they leave; Bland's
// smallest-index rule (artificials ordered last) prevents cycling.
Membership simplex_member(const View &X, const AlgVector &point) {
    size_t n = X.size(), dim = point.size();
    const FieldPtr &f = point[0].field();
    AlgebraicNumber zero = zero_of(f), one = one_of(f);

    size_t rows = dim + 1, ncols = n + dim;  // lambda columns then surplus columns
    std::vector<std::vector<AlgebraicNumber>> T(rows + 1);  // last row = objective
    std::vector<AlgebraicNumber> rhs(rows + 1, zero);
    for (size_t r = 0; r < rows; r++) T[r].assign(ncols, zero);
    T[rows].assign(ncols, zero);
    for (size_t r = 0; r < dim; r++) {
        for (size_t j = 0; j < n; j++) T[r][j] = (*X[j])[r];
        T[r][n + r] = -one;
        rhs[r] = point[r];
    }
    for (size_t j = 0; j < n; j++) T[rows - 1][j] = one;
    rhs[rows - 1] = one;
    // objective: minimize the artificial total; reduced costs start at the
    // negated column sums
    for (size_t j = 0; j < ncols; j++) {
        AlgebraicNumber s = zero;
        for (size_t r = 0; r < rows; r++) s = s + T[r][j];
        T[rows][j] = -s;
    }
    {
        AlgebraicNumber s = zero;
        for (size_t r = 0; r < rows; r++) s = s + rhs[r];
        rhs[rows] = -s;
    }
    std::vector<long> basis(rows);
    for (size_t r = 0; r < rows; r++) basis[r] = -1 - (long)r;  // artificial of row r

    for (;;) {
        size_t enter = ncols;
        for (size_t j = 0; j < ncols; j++)
            if (T[rows][j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == ncols) break;
        // ratio test, ties by smallest basic index (artificials count as large)
        size_t leave = rows;
        for (size_t r = 0; r < rows; r++) {
            if (T[r][enter].sign() <= 0) continue;
            if (leave == rows) {
                leave = r;
                continue;
            }
            int c = (rhs[r] * T[leave][enter] - rhs[leave] * T[r][enter]).sign();
            if (c < 0)
                leave = r;
            else if (c == 0) {
                long ir = basis[r] < 0 ? (long)(ncols - basis[r]) : basis[r];
                long il = basis[leave] < 0 ? (long)(ncols - basis[leave]) : basis[leave];
                if (ir < il) leave = r;
            }
        }
        if (leave == rows) throw std::logic_error("phase-1 simplex unbounded");
        // pivot
        AlgebraicNumber inv = T[leave][enter].inverse();
        for (size_t j = 0; j < ncols; j++)
            if (!T[leave][j].is_zero()) T[leave][j] = T[leave][j] * inv;
        rhs[leave] = rhs[leave] * inv;
        for (size_t r = 0; r <= rows; r++) {
            if (r == leave || T[r][enter].is_zero()) continue;
            AlgebraicNumber factor = T[r][enter];
            for (size_t j = 0; j < ncols; j++)
                if (!T[leave][j].is_zero()) T[r][j] = T[r][j] - factor * T[leave][j];
            rhs[r] = rhs[r] - factor * rhs[leave];
        }
        basis[leave] = (long)enter;
    }

    if (rhs[rows].sign() != 0) return {};  // artificials stuck above zero: infeasible

    Membership res;
    res.inside = true;
    res.lambda.assign(n, zero);
    for (size_t r = 0; r < rows; r++)
        if (basis[r] >= 0 && basis[r] < (long)n) res.lambda[basis[r]] = rhs[r];
    return res;
}

// trusts nothing from the solver: the witness is rechecked by plain arithmetic
void recheck_witness(const View &X, const AlgVector &point, const Membership &m) {
    const FieldPtr &f = point[0].field();
    AlgebraicNumber total = zero_of(f);
    for (const auto &l : m.lambda) {
        if (l.sign() < 0) throw std::logic_error("membership witness has a negative weight");
        total = total + l;
    }
    if (!(total == one_of(f))) throw std::logic_error("membership witness does not sum to 1");
    for (size_t i = 0; i < point.size(); i++) {
        AlgebraicNumber s = zero_of(f);
        for (size_t j = 0; j < X.size(); j++)
            if (!m.lambda[j].is_zero()) s = s + m.lambda[j] * (*X[j])[i];
        if ((s - point[i]).sign() < 0)
            throw std::logic_error("membership witness fails coordinate domination");
    }
}

Membership member_view(const View &X, const AlgVector &point) {
    if (X.empty()) return {};
    // fast path: a single point that dominates the query is its own witness
    for (size_t j = 0; j < X.size(); j++) {
        if (alg_vector_le(point, *X[j])) {
            Membership m;
            m.inside = true;
            m.lambda.assign(X.size(), zero_of(point[0].field()));
            m.lambda[j] = one_of(point[0].field());
            return m;
        }
    }
    Membership m = simplex_member(X, point);
    if (m.inside) recheck_witness(X, point, m);
    return m;
}

}  // namespace

Membership member_conv_le(const std::vector<AlgVector> &X, const AlgVector &point) {
    View v;
    v.reserve(X.size());
    for (const auto &x : X) v.push_back(&x);
    return member_view(v, point);
}

namespace {

// hull over an index set; returns the kept indices in order
std::vector<size_t> hull_indices(const std::vector<const AlgVector *> &pts) {
    std::vector<bool> alive(pts.size(), true);
    for (size_t i = 0; i < pts.size(); i++) {
        View others;
        for (size_t j = 0; j < pts.size(); j++)
            if (alive[j] && j != i) others.push_back(pts[j]);
        if (member_view(others, *pts[i]).inside) alive[i] = false;
    }
    std::vector<size_t> kept;
    for (size_t i = 0; i < pts.size(); i++)
        if (alive[i]) kept.push_back(i);
    return kept;
}

}  // namespace

std::vector<AlgVector> hull_le(std::vector<AlgVector> X) {
    std::vector<const AlgVector *> pts;
    for (const auto &x : X) pts.push_back(&x);
    std::vector<AlgVector> out;
    for (size_t i : hull_indices(pts)) out.push_back(std::move(X[i]));
    return out;
}

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

AlgVector lift_int_vector(const FieldPtr &f, const IntVector &v) {
    AlgVector out;
    out.reserve(v.size());
    for (const auto &x : v) out.push_back(AlgebraicNumber::from_rational(f, Rational(x)));
    return out;
}

AlgVector apply_matrix(const IntMatrix &M, const AlgVector &x, const AlgebraicNumber &scale) {
    const FieldPtr &f = x[0].field();
    AlgVector y(M.size(), zero_of(f));
    for (size_t i = 0; i < M.size(); i++) {
        AlgebraicNumber acc = zero_of(f);
        for (size_t j = 0; j < x.size(); j++)
            if (M[i][j] != 0 && !x[j].is_zero()) acc = acc + x[j].scaled(Rational(M[i][j]));
        y[i] = acc * scale;
    }
    return y;
}

AlgVector apply_tensor(const std::vector<IntMatrix> &t, const AlgVector &u, const AlgVector &w) {
    const FieldPtr &f = u[0].field();
    size_t m = t.size();
    AlgVector y(m, zero_of(f));
    for (size_t i = 0; i < m; i++) {
        AlgebraicNumber acc = zero_of(f);
        for (size_t a = 0; a < m; a++) {
            if (u[a].is_zero()) continue;
            for (size_t b = 0; b < m; b++)
                if (t[i][a][b] != 0 && !w[b].is_zero())
                    acc = acc + (u[a] * w[b]).scaled(Rational(t[i][a][b]));
        }
        y[i] = acc;
    }
    return y;
}

void validate_seeds(const std::vector<AlgVector> &seeds, size_t m, const FieldPtr &f) {
    for (const auto &s : seeds) {
        if (s.size() != m) throw InputError("seed vector has wrong dimension");
        for (const auto &c : s) {
            if (!c.field()->same_field(*f)) throw InputError("seed vector from a different field");
            if (c.sign() < 0) throw InputError("seed vector has a negative coordinate");
        }
    }
}

struct Tracked {
    AlgVector x;
    int id = 0;
    bool done = false;  // pathwidth: all images of this point verified inside
};

void hull_tracked(std::vector<Tracked> &pts) {
    std::vector<const AlgVector *> view;
    for (const auto &p : pts) view.push_back(&p.x);
    std::vector<Tracked> out;
    for (size_t i : hull_indices(view)) out.push_back(std::move(pts[i]));
    pts = std::move(out);
}

std::vector<AlgVector> strip(const std::vector<Tracked> &pts) {
    std::vector<AlgVector> out;
    for (const auto &p : pts) out.push_back(p.x);
    return out;
}

}  // namespace

SaturationResult saturate_pathwidth(const OperatorSystem &sys, const AlgebraicNumber &alpha,
                                    const std::vector<AlgVector> &seeds, const Limits &lim) {
    const FieldPtr &f = alpha.field();
    if (alpha.sign() <= 0) throw InputError("alpha must be positive");
    validate_seeds(seeds, sys.m, f);
    AlgebraicNumber inv_alpha = alpha.inverse();

    std::vector<Tracked> pts;
    std::set<AlgVector, CoeffLess> seen;
    auto push = [&](AlgVector x) {
        if (seen.insert(x).second) pts.push_back({std::move(x), (int)pts.size(), false});
    };
    push(lift_int_vector(f, sys.v));
    for (const auto &s : seeds) push(AlgVector(s));
    hull_tracked(pts);

    SaturationResult res;
    Clock clock;
    int workers = lim.workers ? lim.workers : default_workers();
    for (;;) {
        std::vector<size_t> pending;
        for (size_t i = 0; i < pts.size(); i++)
            if (!pts[i].done) pending.push_back(i);
        if (pending.empty()) break;
        if (res.rounds >= lim.max_rounds) {
            res.failure = "round limit reached";
            res.X = strip(pts);
            return res;
        }
        res.rounds++;

        std::vector<AlgVector> images;
        for (size_t i : pending)
            for (const auto &M : sys.mats) images.push_back(apply_matrix(M, pts[i].x, inv_alpha));

        View snapshot;
        for (const auto &p : pts) snapshot.push_back(&p.x);
        std::vector<char> outside(images.size(), 0);
        parallel_for(workers, images.size(), [&](size_t t) {
            outside[t] = member_view(snapshot, images[t]).inside ? 0 : 1;
        });
        res.lp_calls += images.size();

        for (size_t i : pending) pts[i].done = true;
        seen.clear();
        for (const auto &p : pts) seen.insert(p.x);
        size_t before = pts.size();
        for (size_t t = 0; t < images.size(); t++)
            if (outside[t]) push(std::move(images[t]));
        if (pts.size() == before) continue;  // nothing new; remaining pending drain next loop
        if (pts.size() > lim.max_points) {
            res.failure = "point limit reached";
            res.X = strip(pts);
            return res;
        }
        hull_tracked(pts);
        if (lim.time_limit > 0 && clock.seconds() > lim.time_limit) {
            res.failure = "time limit reached";
            res.X = strip(pts);
            return res;
        }
    }

    res.found = true;
    res.X = strip(pts);
    res.cert.field = f;
    res.cert.alpha = alpha;
    res.cert.problem = sys.problem;
    res.cert.graph_class = "pw" + std::to_string(sys.k);
    res.cert.system_hash = sys.fingerprint();
    res.cert.constant = one_of(f);
    res.cert.seeds = seeds;
    res.cert.X = res.X;
    res.cert.state_names = sys.state_names;
    return res;
}

SaturationResult saturate_tree(const TreeSystem &sys, const AlgebraicNumber &alpha,
                               const std::vector<AlgVector> &seeds, const Limits &lim) {
    const FieldPtr &f = alpha.field();
    if (alpha.sign() <= 0) throw InputError("alpha must be positive");
    validate_seeds(seeds, sys.m, f);
    AlgebraicNumber inv_alpha = alpha.inverse();

    std::vector<Tracked> pts;
    std::set<AlgVector, CoeffLess> seen;
    int next_id = 0;
    auto push = [&](AlgVector x) {
        if (seen.insert(x).second) pts.push_back({std::move(x), next_id++, false});
    };
    {
        AlgVector v0 = lift_int_vector(f, sys.v);
        for (auto &c : v0) c = c * inv_alpha;
        push(std::move(v0));
    }
    for (const auto &s : seeds) push(AlgVector(s));
    hull_tracked(pts);

    // ordered pairs already verified, keyed by point id (ids survive hulls)
    std::set<std::pair<int, int>> done_phi, done_delta;

    SaturationResult res;
    Clock clock;
    int workers = lim.workers ? lim.workers : default_workers();
    for (;;) {
        struct Job {
            bool is_delta;
            int id1, id2;
            size_t i, j;
        };
        std::vector<Job> jobs;
        for (size_t i = 0; i < pts.size(); i++)
            for (size_t j = 0; j < pts.size(); j++) {
                auto key = std::make_pair(pts[i].id, pts[j].id);
                if (!done_phi.count(key)) jobs.push_back({false, key.first, key.second, i, j});
                if (sys.has_delta() && !done_delta.count(key))
                    jobs.push_back({true, key.first, key.second, i, j});
            }
        if (jobs.empty()) break;
        if (res.rounds >= lim.max_rounds) {
            res.failure = "round limit reached";
            res.X = strip(pts);
            return res;
        }
        res.rounds++;

        std::vector<AlgVector> images(jobs.size());
        std::vector<char> outside(jobs.size(), 0);
        View snapshot;
        for (const auto &p : pts) snapshot.push_back(&p.x);
        parallel_for(workers, jobs.size(), [&](size_t t) {
            const Job &jb = jobs[t];
            images[t] = apply_tensor(jb.is_delta ? sys.delta : sys.phi, pts[jb.i].x, pts[jb.j].x);
            outside[t] = member_view(snapshot, images[t]).inside ? 0 : 1;
        });
        res.lp_calls += jobs.size();

        for (const auto &jb : jobs)
            (jb.is_delta ? done_delta : done_phi).insert({jb.id1, jb.id2});
        seen.clear();
        for (const auto &p : pts) seen.insert(p.x);
        size_t before = pts.size();
        for (size_t t = 0; t < jobs.size(); t++)
            if (outside[t]) push(std::move(images[t]));
        if (pts.size() == before) continue;
        if (pts.size() > lim.max_points) {
            res.failure = "point limit reached";
            res.X = strip(pts);
            return res;
        }
        hull_tracked(pts);
        if (lim.time_limit > 0 && clock.seconds() > lim.time_limit) {
            res.failure = "time limit reached";
            res.X = strip(pts);
            return res;
        }
    }

    res.found = true;
    res.X = strip(pts);
    res.cert.field = f;
    res.cert.alpha = alpha;
    res.cert.problem = sys.problem;
    res.cert.graph_class = sys.has_delta() ? "forest" : "tree";
    res.cert.system_hash = sys.fingerprint();
    if (sys.has_delta()) {
        res.cert.constant = one_of(f);
    } else {
        // order-n tree count = p . Psi with Psi/alpha^n in conv_<=(X)
        AlgVector p = lift_int_vector(f, sys.p);
        AlgebraicNumber best = zero_of(f);
        for (const auto &x : res.X) {
            AlgebraicNumber dot = zero_of(f);
            for (size_t i = 0; i < p.size(); i++) dot = dot + p[i] * x[i];
            if ((dot - best).sign() > 0) best = dot;
        }
        res.cert.constant = best;
    }
    res.cert.seeds = seeds;
    res.cert.X = res.X;
    res.cert.state_names = sys.state_names;
    return res;
}

OperatorSystem canonical_pw_system(const Problem &pr, int k) {
    OperatorSystem sys = build_system(pr, k);
    prune_accessibility(sys);
    prune_dominated(sys);
    return sys;
}

TreeSystem canonical_tree_system(const Problem &pr, bool with_union) {
    TreeSystem sys = build_tree_system(pr, with_union);
    prune_tree_system(sys);
    return sys;
}

Verification verify_certificate(const Certificate &cert, const Limits &lim) {
    auto refute = [](const std::string &why) { return Verification{false, why}; };
    const FieldPtr &f = cert.field;
    if (!f) return refute("certificate has no field");
    if (!cert.alpha.field()->same_field(*f)) return refute("alpha is not in the stated field");
    if (cert.alpha.sign() <= 0) return refute("alpha is not positive");

    int k = 0;
    bool tree_like = false, with_union = false;
    if (cert.graph_class == "pw1")
        k = 1;
    else if (cert.graph_class == "pw2")
        k = 2;
    else if (cert.graph_class == "tree")
        tree_like = true;
    else if (cert.graph_class == "forest")
        tree_like = with_union = true;
    else
        return refute("unknown graph class '" + cert.graph_class + "'");

    OperatorSystem psys;
    TreeSystem tsys;
    size_t m;
    uint64_t hash;
    if (tree_like) {
        tsys = canonical_tree_system(cert.problem, with_union);
        m = tsys.m;
        hash = tsys.fingerprint();
    } else {
        psys = canonical_pw_system(cert.problem, k);
        m = psys.m;
        hash = psys.fingerprint();
    }
    if (hash != cert.system_hash) return refute("system fingerprint mismatch");

    if (cert.X.empty()) return refute("empty point set");
    for (size_t i = 0; i < cert.X.size(); i++) {
        if (cert.X[i].size() != m) return refute("point dimension mismatch");
        for (const auto &c : cert.X[i]) {
            if (!c.field()->same_field(*f)) return refute("point outside the stated field");
            if (c.sign() < 0) return refute("point has a negative coordinate");
        }
        for (size_t j = 0; j < i; j++)
            if (alg_vector_eq(cert.X[i], cert.X[j])) return refute("duplicate point");
    }

    View X;
    for (const auto &x : cert.X) X.push_back(&x);
    AlgebraicNumber inv_alpha = cert.alpha.inverse();
    int workers = lim.workers ? lim.workers : default_workers();

    // base case: the fresh vector must already be covered
    {
        AlgVector v0 = lift_int_vector(f, tree_like ? tsys.v : psys.v);
        if (tree_like)
            for (auto &c : v0) c = c * inv_alpha;
        if (!member_view(X, v0).inside) return refute("fresh vector escapes conv_<=(X)");
    }

    std::vector<std::string> bad;
    std::mutex mu;
    if (!tree_like) {
        size_t total = psys.mats.size() * cert.X.size();
        parallel_for(workers, total, [&](size_t t) {
            size_t mi = t / cert.X.size(), xi = t % cert.X.size();
            AlgVector y = apply_matrix(psys.mats[mi], cert.X[xi], inv_alpha);
            if (!member_view(X, y).inside) {
                std::lock_guard<std::mutex> lk(mu);
                bad.push_back("operator " + std::to_string(mi) + " applied to point " +
                              std::to_string(xi) + " escapes conv_<=(X)");
            }
        });
    } else {
        size_t pairs = cert.X.size() * cert.X.size();
        size_t total = pairs * (with_union ? 2 : 1);
        parallel_for(workers, total, [&](size_t t) {
            bool is_delta = t >= pairs;
            size_t p = t % pairs, i = p / cert.X.size(), j = p % cert.X.size();
            AlgVector y = apply_tensor(is_delta ? tsys.delta : tsys.phi, cert.X[i], cert.X[j]);
            if (!member_view(X, y).inside) {
                std::lock_guard<std::mutex> lk(mu);
                bad.push_back(std::string(is_delta ? "union" : "composition") + " of points " +
                              std::to_string(i) + "," + std::to_string(j) +
                              " escapes conv_<=(X)");
            }
        });
    }
    if (!bad.empty()) {
        std::sort(bad.begin(), bad.end());
        return refute(bad.front());
    }

    if (tree_like && !with_union) {
        AlgVector p = lift_int_vector(f, tsys.p);
        AlgebraicNumber best = zero_of(f);
        for (const auto &x : cert.X) {
            AlgebraicNumber dot = zero_of(f);
            for (size_t i = 0; i < p.size(); i++) dot = dot + p[i] * x[i];
            if ((dot - best).sign() > 0) best = dot;
        }
        if (!(best == cert.constant)) return refute("stated constant does not match max p.x");
    } else {
        if (!(cert.constant == one_of(f))) return refute("constant must be 1 for this class");
    }
    return {true, ""};
}

LowerBound lower_bound(const OperatorSystem &sys, int depth) {
    if (depth < 1) throw InputError("lower_bound: depth must be >= 1");
    size_t m = sys.m;
    LowerBound best;

    auto consider = [&](const IntMatrix &P, int len, const std::vector<int> &word) {
        // numeric power iteration to pick a direction, then an exact
        // Collatz-Wielandt bound at a nearby rational vector
        std::vector<double> x(m, 1.0);
        for (int it = 0; it < 80; it++) {
            std::vector<double> y(m, 0.0);
            double mx = 0;
            for (size_t i = 0; i < m; i++) {
                for (size_t j = 0; j < m; j++)
                    if (P[i][j] != 0) y[i] += P[i][j].get_d() * x[j];
                mx = std::max(mx, y[i]);
            }
            if (mx <= 0 || !std::isfinite(mx)) return;
            for (auto &v : y) v /= mx;
            x = y;
        }
        std::vector<Rational> q(m, 0);
        for (size_t i = 0; i < m; i++)
            if (x[i] > 1e-9) q[i] = Rational(x[i]);
        Rational r;
        bool first = true;
        for (size_t i = 0; i < m; i++) {
            if (q[i] == 0) continue;
            Rational acc = 0;
            for (size_t j = 0; j < m; j++)
                if (P[i][j] != 0 && q[j] != 0) acc += Rational(P[i][j]) * q[j];
            Rational ratio = acc / q[i];
            if (first || ratio < r) r = ratio, first = false;
        }
        if (first || r <= 0) return;
        // compare r^(1/len) against best: cross-multiply the integer powers
        bool better;
        if (best.length == 0) {
            better = true;
        } else {
            auto qpow = [](const Rational &v, int e) {
                Rational out;
                mpz_pow_ui(out.get_num_mpz_t(), v.get_num_mpz_t(), e);
                mpz_pow_ui(out.get_den_mpz_t(), v.get_den_mpz_t(), e);
                out.canonicalize();
                return out;
            };
            better = qpow(r, best.length) > qpow(best.bound, len);
        }
        if (better) {
            best.bound = r;
            best.length = len;
            best.word = word;
            best.value = std::pow(r.get_d(), 1.0 / len);
        }
    };

    // depth-first over operator words, reusing the product prefix
    std::vector<int> word;
    std::function<void(const IntMatrix &, int)> rec = [&](const IntMatrix &P, int len) {
        if (len > 0) consider(P, len, word);
        if (len == depth) return;
        for (size_t w = 0; w < sys.mats.size(); w++) {
            word.push_back((int)w);
            if (len == 0) {
                rec(sys.mats[w], 1);
            } else {
                IntMatrix Q(m, IntVector(m, 0));
                for (size_t i = 0; i < m; i++)
                    for (size_t l = 0; l < m; l++)
                        if (sys.mats[w][i][l] != 0)
                            for (size_t j = 0; j < m; j++)
                                if (P[l][j] != 0) Q[i][j] += sys.mats[w][i][l] * P[l][j];
                rec(Q, len + 1);
            }
            word.pop_back();
        }
    };
    rec(IntMatrix{}, 0);
    return best;
}

}  // namespace domcert
