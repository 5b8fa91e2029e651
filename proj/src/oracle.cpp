#include "domcert/oracle.hpp"

#include <bit>
#include <random>
#include <sstream>

#include "domcert/tree_system.hpp"

namespace domcert {

namespace {

bool plain_valid(const std::vector<uint32_t> &nb, int n, uint32_t D, const RecognizableSet &sigma,
                 const RecognizableSet &rho) {
    for (int v = 0; v < n; v++) {
        int count = std::popcount(nb[v] & D);
        bool in = (D >> v) & 1;
        if (!(in ? sigma : rho).contains(count)) return false;
    }
    return true;
}

bool counted(const Graph &g, const std::vector<uint32_t> &nb, uint32_t D, const Problem &pr) {
    int n = g.n;
    switch (pr.mode) {
        case Mode::All:
            return plain_valid(nb, n, D, pr.sigma, pr.rho);
        case Mode::Minimal:
        case Mode::SpecialMinDomPw2: {
            if (!plain_valid(nb, n, D, pr.sigma, pr.rho)) return false;
            for (int x = 0; x < n; x++)
                if ((D >> x) & 1)
                    if (plain_valid(nb, n, D & ~(1u << x), pr.sigma, pr.rho)) return false;
            return true;
        }
        case Mode::Maximal: {
            if (!plain_valid(nb, n, D, pr.sigma, pr.rho)) return false;
            for (int x = 0; x < n; x++)
                if (!((D >> x) & 1))
                    if (plain_valid(nb, n, D | (1u << x), pr.sigma, pr.rho)) return false;
            return true;
        }
        case Mode::SpecialMaxInducedMatching: {
            if (!plain_valid(nb, n, D, pr.sigma, pr.rho)) return false;
            // maximal as a matching: no edge with both ends out of D and both
            // ends without any D-neighbor could still be added
            for (auto [u, v] : g.edges) {
                if ((D >> u) & 1 || (D >> v) & 1) continue;
                if ((nb[u] & D) == 0 && (nb[v] & D) == 0) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

BigInt count_bruteforce(const Graph &g, const Problem &pr) {
    if (g.n > 24) throw LimitError("brute-force count limited to 24 vertices");
    auto nb = g.neighbor_masks();
    BigInt total = 0;
    for (uint32_t D = 0; D < (1u << g.n); D++)
        if (counted(g, nb, D, pr)) total += 1;
    return total;
}

IntVector psi_bruteforce(const Graph &open, const std::vector<int> &separator,
                         const Problem &pr) {
    if (open.n > 24) throw LimitError("brute-force psi limited to 24 vertices");
    auto nb = open.neighbor_masks();
    int n = open.n;
    int k = separator.size();
    uint32_t sep_mask = 0;
    for (int s : separator) sep_mask |= 1u << s;

    if (pr.mode == Mode::All) {
        int ps = pr.sigma.p, qs = pr.sigma.q, so = ps + qs;
        int prh = pr.rho.p, qr = pr.rho.q;
        int nv = so + prh + qr;
        size_t dim = 1;
        for (int i = 0; i < k; i++) dim *= nv;
        IntVector psi(dim, 0);
        for (uint32_t D = 0; D < (1u << n); D++) {
            bool ok = true;
            for (int v = 0; v < n && ok; v++) {
                if ((sep_mask >> v) & 1) continue;
                int count = std::popcount(nb[v] & D);
                ok = ((D >> v) & 1 ? pr.sigma : pr.rho).contains(count);
            }
            if (!ok) continue;
            size_t idx = 0;
            for (int i = 0; i < k; i++) {
                int v = separator[i];
                int count = std::popcount(nb[v] & D);
                int st = (D >> v) & 1 ? tau(ps, qs, count) : so + tau(prh, qr, count);
                idx = idx * nv + st;
            }
            psi[idx] += 1;
        }
        return psi;
    }
    if (pr.mode == Mode::Minimal || pr.mode == Mode::Maximal) {
        bool maximal = pr.mode == Mode::Maximal;
        int p, q;
        joint_period(pr.sigma, pr.rho, p, q);
        int cls = p + q, nv = 6 * cls;
        size_t dim = 1;
        for (int i = 0; i < k; i++) dim *= nv;
        IntVector psi(dim, 0);
        auto is_cert = [&](bool in, int count) {
            const RecognizableSet &own = in ? pr.sigma : pr.rho;
            return maximal ? !own.contains(count + 1) : (count == 0 || !own.contains(count - 1));
        };
        auto self_cert = [&](bool in, int count) {
            return maximal ? !pr.sigma.contains(count) : !pr.rho.contains(count);
        };
        for (uint32_t D = 0; D < (1u << n); D++) {
            for (uint32_t pred = 0; pred < (1u << k); pred++) {
                // certificate set: actual certificates off the separator,
                // predicted bits on it
                uint32_t C = 0;
                for (int v = 0; v < n; v++) {
                    bool in = (D >> v) & 1;
                    int count = std::popcount(nb[v] & D);
                    if ((sep_mask >> v) & 1) {
                        int i = 0;
                        while (separator[i] != v) i++;
                        if ((pred >> i) & 1) C |= 1u << v;
                    } else if (is_cert(in, count)) {
                        C |= 1u << v;
                    }
                }
                bool ok = true;
                for (int v = 0; v < n && ok; v++) {
                    if ((sep_mask >> v) & 1) continue;
                    bool in = (D >> v) & 1;
                    int count = std::popcount(nb[v] & D);
                    if (!(in ? pr.sigma : pr.rho).contains(count)) {
                        ok = false;
                        break;
                    }
                    bool flagged = maximal ? !in : in;  // side that owes certificates
                    if (flagged && !self_cert(in, count) && (nb[v] & C) == 0) ok = false;
                }
                if (!ok) continue;
                size_t idx = 0;
                for (int i = 0; i < k; i++) {
                    int v = separator[i];
                    bool in = (D >> v) & 1;
                    int count = std::popcount(nb[v] & D);
                    int f;
                    if (maximal)
                        f = in ? 0 : ((nb[v] & C) ? 2 : 1);
                    else
                        f = !in ? 0 : ((nb[v] & C) ? 2 : 1);
                    int c = (C >> v) & 1;
                    int t = tau(p, q, count);
                    idx = idx * nv + ((f * 2 + c) * cls + t);
                }
                psi[idx] += 1;
            }
        }
        return psi;
    }
    throw InputError("psi oracle supports modes all/min/max");
}

namespace {

void check_one_pw(const OperatorSystem &sys, const Problem &pr, const ExtensionScript &script,
                  bool check_psi, CrossValidateResult &res) {
    BuiltGraph bg = build_graph(script);
    res.cases++;
    BigInt fast = evaluate_count(sys, script.steps, script.completion_mask);
    BigInt slow = count_bruteforce(bg.completed, pr);
    bool bad = fast != slow;
    if (!bad && check_psi) {
        IntVector a = evaluate_psi(sys, script.steps);
        IntVector b = psi_bruteforce(bg.open, bg.separator, pr);
        bad = a != b;
    }
    if (bad && res.mismatches++ == 0) {
        std::ostringstream os;
        os << "problem [" << pr.str() << "] script:\n" << format_extension_script(script)
           << "fast=" << fast.get_str() << " brute=" << slow.get_str();
        res.first_mismatch = os.str();
    }
}

}  // namespace

CrossValidateResult cross_validate_pw(const Problem &pr, int k, int max_steps, int samples,
                                      uint32_t seed) {
    OperatorSystem sys = build_system(pr, k);
    bool check_psi =
        pr.mode == Mode::All || pr.mode == Mode::Minimal || pr.mode == Mode::Maximal;
    CrossValidateResult res;
    auto descs = all_descriptors(k);
    unsigned cmasks = 1u << (k * (k - 1) / 2);
    if (samples == 0) {
        // exhaustive over sequences of length 0..max_steps
        std::vector<int> seq;
        for (int len = 0; len <= max_steps; len++) {
            seq.assign(len, 0);
            for (;;) {
                ExtensionScript script;
                script.k = k;
                for (int i : seq) script.steps.push_back(descs[i]);
                for (unsigned cm = 0; cm < cmasks; cm++) {
                    script.completion_mask = cm;
                    check_one_pw(sys, pr, script, check_psi, res);
                }
                int i = len - 1;
                while (i >= 0 && ++seq[i] == (int)descs.size()) seq[i--] = 0;
                if (i < 0) break;
            }
        }
    } else {
        std::mt19937 rng(seed);
        for (int t = 0; t < samples; t++) {
            ExtensionScript script;
            script.k = k;
            int len = (int)(rng() % (max_steps + 1));
            for (int i = 0; i < len; i++) script.steps.push_back(descs[rng() % descs.size()]);
            script.completion_mask = rng() % cmasks;
            check_one_pw(sys, pr, script, check_psi, res);
        }
    }
    return res;
}

namespace {

TreeScript random_tree_script(std::mt19937 &rng, int leaves, bool with_union) {
    TreeScript t;
    if (leaves <= 1) {
        t.kind = TreeScript::Leaf;
        return t;
    }
    t.kind = with_union && (rng() % 2) ? TreeScript::Union : TreeScript::Compose;
    int left = 1 + (int)(rng() % (leaves - 1));
    t.a = std::make_unique<TreeScript>(random_tree_script(rng, left, with_union));
    t.b = std::make_unique<TreeScript>(random_tree_script(rng, leaves - left, with_union));
    return t;
}

}  // namespace

CrossValidateResult cross_validate_trees(const Problem &pr, bool with_union, int max_leaves,
                                         int samples, uint32_t seed) {
    TreeSystem sys = build_tree_system(pr, with_union);
    bool check_psi =
        pr.mode == Mode::All || pr.mode == Mode::Minimal || pr.mode == Mode::Maximal;
    CrossValidateResult res;
    std::mt19937 rng(seed);
    for (int t = 0; t < samples; t++) {
        int leaves = 1 + (int)(rng() % max_leaves);
        TreeScript s = random_tree_script(rng, leaves, with_union);
        int root;
        Graph g = build_tree_graph(s, root);
        res.cases++;
        BigInt fast = tree_count(sys, s);
        BigInt slow = count_bruteforce(g, pr);
        bool bad = fast != slow;
        if (!bad && check_psi) {
            IntVector a = tree_psi(sys, s);
            IntVector b = psi_bruteforce(g, {root}, pr);
            bad = a != b;
        }
        if (bad && res.mismatches++ == 0) {
            std::ostringstream os;
            os << "problem [" << pr.str() << "] tree script: " << s.str()
               << " fast=" << fast.get_str() << " brute=" << slow.get_str();
            res.first_mismatch = os.str();
        }
    }
    return res;
}

}  // namespace domcert
