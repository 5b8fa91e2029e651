#include "domcert/tree_system.hpp"

#include "domcert/util.hpp"

namespace domcert {

uint64_t TreeSystem::fingerprint() const {
    Fnv1a h;
    h.feed(problem.str());
    h.feed(std::to_string(m));
    h.feed(has_delta() ? "forest" : "tree");
    for (const auto *tensor : {&phi, &delta})
        for (const auto &ti : *tensor)
            for (const auto &row : ti)
                for (const auto &x : row) h.feed(x.get_str());
    for (const auto &x : v) h.feed(x.get_str());
    for (const auto &x : p) h.feed(x.get_str());
    return h.h;
}

TreeSystem build_tree_system(const Problem &pr, bool with_union) {
    if (pr.mode == Mode::SpecialMinDomPw2)
        throw InputError("special-min-dom-pw2 is a width-2 pathwidth system");
    auto va = make_vertex_automaton(pr);
    TreeSystem sys;
    sys.problem = pr;
    sys.m = va->n();
    sys.index_map.resize(sys.m);
    sys.state_names.resize(sys.m);
    for (int i = 0; i < sys.m; i++) {
        sys.index_map[i] = i;
        sys.state_names[i] = va->state_name(i);
    }
    sys.v.assign(sys.m, 0);
    for (int s : va->fresh()) sys.v[s] += 1;
    sys.p.assign(sys.m, 0);
    for (int i = 0; i < sys.m; i++) sys.p[i] = va->accept(i) ? 1 : 0;

    sys.phi.assign(sys.m, IntMatrix(sys.m, IntVector(sys.m, 0)));
    for (int s1 = 0; s1 < sys.m; s1++)
        for (int s2 = 0; s2 < sys.m; s2++) {
            // the second root is finalized with an edge to the first
            int fin = va->add_edge_staying(s2, s1);
            if (fin < 0 || !va->accept(fin)) continue;
            int kept = va->add_edge_leaving(s1, fin);
            if (kept < 0) continue;
            sys.phi[kept][s1][s2] += 1;
        }
    if (with_union) {
        sys.delta.assign(sys.m, IntMatrix(sys.m, IntVector(sys.m, 0)));
        for (int s1 = 0; s1 < sys.m; s1++)
            for (int s2 = 0; s2 < sys.m; s2++)
                if (va->accept(s2)) sys.delta[s1][s1][s2] += 1;
    }
    return sys;
}

void prune_tree_system(TreeSystem &sys) {
    int m = sys.m;
    std::vector<char> acc(m, 0), coacc(m, 0);
    for (int i = 0; i < m; i++) acc[i] = sys.v[i] != 0;
    auto tensors = [&]() {
        std::vector<const std::vector<IntMatrix> *> t{&sys.phi};
        if (sys.has_delta()) t.push_back(&sys.delta);
        return t;
    }();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto *tensor : tensors)
            for (int i = 0; i < m; i++) {
                if (acc[i]) continue;
                for (int s1 = 0; s1 < m && !acc[i]; s1++)
                    for (int s2 = 0; s2 < m; s2++)
                        if ((*tensor)[i][s1][s2] != 0 && acc[s1] && acc[s2]) {
                            acc[i] = 1;
                            changed = true;
                            break;
                        }
            }
    }
    for (int i = 0; i < m; i++) coacc[i] = sys.p[i] != 0;
    changed = true;
    while (changed) {
        changed = false;
        for (const auto *tensor : tensors)
            for (int i = 0; i < m; i++) {
                if (!coacc[i]) continue;
                for (int s1 = 0; s1 < m; s1++)
                    for (int s2 = 0; s2 < m; s2++) {
                        if ((*tensor)[i][s1][s2] == 0) continue;
                        if (acc[s2] && !coacc[s1]) {
                            coacc[s1] = 1;
                            changed = true;
                        }
                        if (acc[s1] && !coacc[s2]) {
                            coacc[s2] = 1;
                            changed = true;
                        }
                    }
            }
    }
    std::vector<int> keep;
    for (int i = 0; i < m; i++)
        if (acc[i] && coacc[i]) keep.push_back(i);
    if ((int)keep.size() == m) return;
    int m2 = keep.size();
    auto project = [&](std::vector<IntMatrix> &tensor) {
        std::vector<IntMatrix> out(m2, IntMatrix(m2, IntVector(m2)));
        for (int i = 0; i < m2; i++)
            for (int a = 0; a < m2; a++)
                for (int b = 0; b < m2; b++) out[i][a][b] = tensor[keep[i]][keep[a]][keep[b]];
        tensor = std::move(out);
    };
    project(sys.phi);
    if (sys.has_delta()) project(sys.delta);
    auto pv = [&](IntVector &vec) {
        IntVector out(m2);
        for (int i = 0; i < m2; i++) out[i] = vec[keep[i]];
        vec = std::move(out);
    };
    pv(sys.v);
    pv(sys.p);
    std::vector<int> im(m2);
    std::vector<std::string> sn(m2);
    for (int i = 0; i < m2; i++) {
        im[i] = sys.index_map[keep[i]];
        sn[i] = sys.state_names[keep[i]];
    }
    sys.index_map = std::move(im);
    sys.state_names = std::move(sn);
    sys.m = m2;
}

namespace {

IntVector apply_bilinear(const std::vector<IntMatrix> &tensor, const IntVector &u,
                         const IntVector &w) {
    int m = u.size();
    IntVector out(m, 0);
    for (int i = 0; i < m; i++)
        for (int a = 0; a < m; a++) {
            if (u[a] == 0) continue;
            for (int b = 0; b < m; b++)
                if (tensor[i][a][b] != 0 && w[b] != 0) out[i] += tensor[i][a][b] * u[a] * w[b];
        }
    return out;
}

}  // namespace

IntVector tree_psi(const TreeSystem &sys, const TreeScript &s) {
    if (s.kind == TreeScript::Leaf) return sys.v;
    IntVector u = tree_psi(sys, *s.a);
    IntVector w = tree_psi(sys, *s.b);
    if (s.kind == TreeScript::Compose) return apply_bilinear(sys.phi, u, w);
    if (!sys.has_delta()) throw InputError("union script on a tree-only system");
    return apply_bilinear(sys.delta, u, w);
}

BigInt tree_count(const TreeSystem &sys, const TreeScript &s) {
    IntVector psi = tree_psi(sys, s);
    BigInt out = 0;
    for (int i = 0; i < sys.m; i++) out += sys.p[i] * psi[i];
    return out;
}

}  // namespace domcert
