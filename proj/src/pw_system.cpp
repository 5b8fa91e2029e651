#include "domcert/pw_system.hpp"

#include <istream>
#include <sstream>

#include "domcert/util.hpp"

namespace domcert {

uint64_t OperatorSystem::fingerprint() const {
    Fnv1a h;
    h.feed(problem.str());
    h.feed(std::to_string(k));
    h.feed(std::to_string(m));
    for (size_t a = 0; a < mats.size(); a++) {
        h.feed(descriptor_name(descriptors[a], k));
        for (const auto &row : mats[a])
            for (const auto &x : row) h.feed(x.get_str());
    }
    for (const auto &c : completions)
        for (const auto &x : c) h.feed(x.get_str());
    for (const auto &x : v) h.feed(x.get_str());
    return h.h;
}

OperatorSystem build_system(const Problem &pr, int k) {
    auto ta = make_tuple_automaton(pr, k);
    OperatorSystem sys;
    sys.problem = pr;
    sys.k = k;
    sys.m = ta->dim();
    sys.descriptors = all_descriptors(k);
    sys.index_map.resize(sys.m);
    for (int i = 0; i < sys.m; i++) sys.index_map[i] = i;
    sys.state_names.resize(sys.m);
    for (int i = 0; i < sys.m; i++) sys.state_names[i] = ta->state_name(i);

    sys.v.assign(sys.m, 0);
    for (int s : ta->initial()) sys.v[s] += 1;

    std::vector<int> out;
    for (const auto &d : sys.descriptors) {
        IntMatrix M(sys.m, IntVector(sys.m, 0));
        for (int s = 0; s < sys.m; s++) {
            out.clear();
            ta->apply(d, s, out);
            for (int t : out) M[t][s] += 1;
        }
        sys.mats.push_back(std::move(M));
    }

    int pair_bits = k * (k - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pair_bits); mask++) {
        IntVector p(sys.m, 0);
        for (int s = 0; s < sys.m; s++) p[s] = ta->complete_accept(mask, s) ? 1 : 0;
        sys.completions.push_back(std::move(p));
    }
    return sys;
}

void prune_accessibility(OperatorSystem &sys) {
    int m = sys.m;
    std::vector<char> acc(m, 0), coacc(m, 0);
    for (int i = 0; i < m; i++) acc[i] = sys.v[i] != 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &M : sys.mats)
            for (int i = 0; i < m; i++) {
                if (acc[i]) continue;
                for (int j = 0; j < m; j++)
                    if (acc[j] && M[i][j] != 0) {
                        acc[i] = 1;
                        changed = true;
                        break;
                    }
            }
    }
    for (const auto &c : sys.completions)
        for (int i = 0; i < m; i++)
            if (c[i] != 0) coacc[i] = 1;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto &M : sys.mats)
            for (int j = 0; j < m; j++) {
                if (coacc[j]) continue;
                for (int i = 0; i < m; i++)
                    if (coacc[i] && M[i][j] != 0) {
                        coacc[j] = 1;
                        changed = true;
                        break;
                    }
            }
    }
    std::vector<int> keep;
    for (int i = 0; i < m; i++)
        if (acc[i] && coacc[i]) keep.push_back(i);
    if ((int)keep.size() == m) return;

    int m2 = keep.size();
    for (auto &M : sys.mats) {
        IntMatrix N(m2, IntVector(m2));
        for (int i = 0; i < m2; i++)
            for (int j = 0; j < m2; j++) N[i][j] = M[keep[i]][keep[j]];
        M = std::move(N);
    }
    for (auto &c : sys.completions) {
        IntVector n2(m2);
        for (int i = 0; i < m2; i++) n2[i] = c[keep[i]];
        c = std::move(n2);
    }
    {
        IntVector n2(m2);
        for (int i = 0; i < m2; i++) n2[i] = sys.v[keep[i]];
        sys.v = std::move(n2);
    }
    {
        std::vector<int> im(m2);
        std::vector<std::string> sn(m2);
        for (int i = 0; i < m2; i++) {
            im[i] = sys.index_map[keep[i]];
            sn[i] = sys.state_names[keep[i]];
        }
        sys.index_map = std::move(im);
        sys.state_names = std::move(sn);
    }
    sys.m = m2;
}

void prune_dominated(OperatorSystem &sys) {
    size_t n = sys.mats.size();
    std::vector<char> drop(n, 0);
    auto le = [&](const IntMatrix &A, const IntMatrix &B) {
        for (int i = 0; i < sys.m; i++)
            for (int j = 0; j < sys.m; j++)
                if (A[i][j] > B[i][j]) return false;
        return true;
    };
    for (size_t a = 0; a < n; a++) {
        if (drop[a]) continue;
        for (size_t b = 0; b < n; b++) {
            if (a == b || drop[b]) continue;
            if (le(sys.mats[a], sys.mats[b])) {
                // equal matrices: keep the earlier one
                if (le(sys.mats[b], sys.mats[a]) && b < a) continue;
                drop[a] = 1;
                break;
            }
        }
    }
    std::vector<IntMatrix> mats;
    std::vector<Descriptor> descs;
    for (size_t a = 0; a < n; a++)
        if (!drop[a]) {
            mats.push_back(std::move(sys.mats[a]));
            descs.push_back(sys.descriptors[a]);
        }
    sys.mats = std::move(mats);
    sys.descriptors = std::move(descs);
}

IntVector evaluate_psi(const OperatorSystem &sys, const std::vector<Descriptor> &seq) {
    IntVector cur = sys.v;
    auto find = [&](const Descriptor &d) -> const IntMatrix & {
        for (size_t a = 0; a < sys.descriptors.size(); a++)
            if (sys.descriptors[a].o == d.o && sys.descriptors[a].edges == d.edges)
                return sys.mats[a];
        throw InputError("descriptor not present in system (pruned?)");
    };
    for (const auto &d : seq) {
        const IntMatrix &M = find(d);
        IntVector nxt(sys.m, 0);
        for (int i = 0; i < sys.m; i++)
            for (int j = 0; j < sys.m; j++)
                if (M[i][j] != 0 && cur[j] != 0) nxt[i] += M[i][j] * cur[j];
        cur = std::move(nxt);
    }
    return cur;
}

BigInt evaluate_count(const OperatorSystem &sys, const std::vector<Descriptor> &seq,
                      unsigned completion_mask) {
    if (completion_mask >= sys.completions.size()) throw InputError("bad completion mask");
    IntVector psi = evaluate_psi(sys, seq);
    BigInt out = 0;
    for (int i = 0; i < sys.m; i++) out += sys.completions[completion_mask][i] * psi[i];
    return out;
}

ExtensionScript parse_extension_script(std::istream &in, int k) {
    ExtensionScript s;
    s.k = k;
    std::string line;
    bool completed = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (completed) throw InputError("lines after completion: " + line);
        if (tok == "complete") {
            std::string e;
            ls >> e;
            if (e.rfind("edges=", 0) != 0) throw InputError("bad completion line: " + line);
            s.completion_mask = std::stoul(e.substr(6), nullptr, 2);
            if (s.completion_mask >= (1u << (k * (k - 1) / 2)))
                throw InputError("completion mask out of range: " + line);
            completed = true;
            continue;
        }
        if (tok.rfind("keep=", 0) != 0) throw InputError("bad step line: " + line);
        Descriptor d;
        std::string val = tok.substr(5);
        if (val == "new")
            d.o = -1;
        else {
            d.o = std::stoi(val);
            if (d.o < 0 || d.o >= k) throw InputError("keep position out of range: " + line);
        }
        std::string e;
        ls >> e;
        if (e.rfind("edges=", 0) != 0) throw InputError("bad step line: " + line);
        d.edges = std::stoul(e.substr(6), nullptr, 2);
        if (d.edges >= (1u << k)) throw InputError("edge mask out of range: " + line);
        s.steps.push_back(d);
    }
    if (!completed) throw InputError("extension script missing completion line");
    return s;
}

std::string format_extension_script(const ExtensionScript &s) {
    std::ostringstream os;
    for (const auto &d : s.steps) os << descriptor_name(d, s.k) << "\n";
    os << "complete edges=";
    int bits = std::max(1, s.k * (s.k - 1) / 2);
    for (int i = bits - 1; i >= 0; i--) os << ((s.completion_mask >> i) & 1 ? '1' : '0');
    os << "\n";
    return os.str();
}

}  // namespace domcert
