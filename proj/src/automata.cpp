#include "domcert/automata.hpp"

#include <sstream>

namespace domcert {

Mode parse_mode(const std::string &s) {
    if (s == "all") return Mode::All;
    if (s == "min" || s == "minimal") return Mode::Minimal;
    if (s == "max" || s == "maximal") return Mode::Maximal;
    if (s == "special-max-induced-matching") return Mode::SpecialMaxInducedMatching;
    if (s == "special-min-dom-pw2") return Mode::SpecialMinDomPw2;
    throw InputError("unknown mode: " + s);
}

std::string mode_str(Mode m) {
    switch (m) {
        case Mode::All: return "all";
        case Mode::Minimal: return "min";
        case Mode::Maximal: return "max";
        case Mode::SpecialMaxInducedMatching: return "special-max-induced-matching";
        case Mode::SpecialMinDomPw2: return "special-min-dom-pw2";
    }
    return "?";
}

Problem Problem::make(const std::string &sigma_text, const std::string &rho_text,
                      const std::string &mode_text) {
    Problem pr;
    pr.mode = parse_mode(mode_text);
    std::string st = sigma_text, rt = rho_text;
    if (pr.mode == Mode::SpecialMaxInducedMatching) {
        if (st.empty()) st = "{1}";
        if (rt.empty()) rt = "N";
    } else if (pr.mode == Mode::SpecialMinDomPw2) {
        if (st.empty()) st = "N";
        if (rt.empty()) rt = "N+";
    }
    pr.sigma = RecognizableSet::parse(st);
    pr.rho = RecognizableSet::parse(rt);
    if (pr.mode == Mode::SpecialMaxInducedMatching &&
        !(pr.sigma == RecognizableSet::parse("{1}") && pr.rho == RecognizableSet::parse("N")))
        throw InputError("special-max-induced-matching is defined for sigma={1}, rho=N");
    if (pr.mode == Mode::SpecialMinDomPw2 &&
        !(pr.sigma == RecognizableSet::parse("N") && pr.rho == RecognizableSet::parse("N+")))
        throw InputError("special-min-dom-pw2 is defined for sigma=N, rho=N+");
    return pr;
}

std::string Problem::str() const {
    return "sigma=" + sigma.str() + "; rho=" + rho.str() + "; mode=" + mode_str(mode);
}

Problem Problem::parse(const std::string &line) {
    std::string s, r, m;
    std::stringstream ss(line);
    std::string part;
    while (std::getline(ss, part, ';')) {
        size_t a = part.find_first_not_of(' ');
        if (a == std::string::npos) continue;
        part = part.substr(a);
        auto eq = part.find('=');
        if (eq == std::string::npos) throw InputError("bad problem line: " + line);
        std::string key = part.substr(0, eq), val = part.substr(eq + 1);
        while (!val.empty() && val.back() == ' ') val.pop_back();
        if (key == "sigma")
            s = val;
        else if (key == "rho")
            r = val;
        else if (key == "mode")
            m = val;
        else
            throw InputError("bad problem key: " + key);
    }
    if (m.empty()) throw InputError("problem line missing mode: " + line);
    return make(s, r, m);
}

// ------------------------------------------------------------ mode = all ---

namespace {

// States 0..ps+qs-1: in the set, neighbor-count class per sigma's compression.
// States ps+qs..: outside the set, count class per rho's compression.
class AllAutomaton final : public VertexAutomaton {
  public:
    explicit AllAutomaton(const Problem &pr) : sigma_(pr.sigma), rho_(pr.rho) {
        so_ = sigma_.p + sigma_.q;
        n_ = so_ + rho_.p + rho_.q;
    }
    int n() const override { return n_; }
    std::vector<int> fresh() const override { return {0, so_}; }
    bool member(int s) const override { return s < so_; }
    bool accept(int s) const override {
        return member(s) ? sigma_.table[s] : rho_.table[s - so_];
    }
    int add_edge_staying(int s, int other) const override {
        if (!member(other)) return s;
        if (member(s)) return tau(sigma_.p, sigma_.q, s + 1);
        return so_ + tau(rho_.p, rho_.q, (s - so_) + 1);
    }
    int add_edge_leaving(int s, int other_final) const override {
        return add_edge_staying(s, other_final);
    }
    std::string state_name(int s) const override {
        return member(s) ? "in:" + std::to_string(s)
                         : "out:" + std::to_string(s - so_);
    }

  private:
    RecognizableSet sigma_, rho_;
    int so_, n_;
};

// ------------------------------------------------------- min / max modes ---

// States are triples (f, c, t): t is the neighbor-count class under the joint
// compression of sigma and rho; c predicts whether this vertex ends up in the
// certificate set; f records set membership and whether a certificate
// neighbor has been seen.
//   minimal: f = 0 outside, 1 in the set without certificate neighbor, 2 with
//   maximal: f = 0 in the set, 1 outside without certificate neighbor, 2 with
class MinMaxAutomaton final : public VertexAutomaton {
  public:
    MinMaxAutomaton(const Problem &pr, bool maximal)
        : sigma_(pr.sigma), rho_(pr.rho), maximal_(maximal) {
        joint_period(sigma_, rho_, p_, q_);
        cls_ = p_ + q_;
        n_ = 6 * cls_;
    }
    int n() const override { return n_; }
    std::vector<int> fresh() const override {
        return {enc(0, 0, 0), enc(0, 1, 0), enc(1, 0, 0), enc(1, 1, 0)};
    }
    bool member(int s) const override { return maximal_ ? f(s) == 0 : f(s) >= 1; }
    bool cert(int s) const override { return c(s); }
    int add_edge_staying(int s, int other) const override {
        int nf = f(s), nc = c(s), nt = t(s);
        if (member(other)) nt = tau(p_, q_, nt + 1);
        if (cert(other) && nf == 1) nf = 2;
        return enc(nf, nc, nt);
    }
    int add_edge_leaving(int s, int other_final) const override {
        return add_edge_staying(s, other_final);
    }
    bool accept(int s) const override {
        bool in = member(s);
        int count = t(s);
        const RecognizableSet &own = in ? sigma_ : rho_;
        if (!own.contains(count)) return false;
        // certificate-bit consistency: is this vertex actually a certificate?
        bool is_cert;
        if (!maximal_) {
            is_cert = count == 0 ? true : !own.contains(count - 1);
        } else {
            is_cert = !own.contains(tau(p_, q_, count + 1));
        }
        if (is_cert != (bool)c(s)) return false;
        // the unflagged side needs each non-self-certified vertex to have a
        // certificate neighbor
        if (!maximal_) {
            if (in) {
                bool self = !rho_.contains(count);  // removal breaks the vertex itself
                if (f(s) == 1 && !self) return false;
            }
        } else {
            if (!in) {
                bool self = !sigma_.contains(count);  // the vertex cannot join
                if (f(s) == 1 && !self) return false;
            }
        }
        return true;
    }
    std::string state_name(int s) const override {
        return "f" + std::to_string(f(s)) + "c" + std::to_string(c(s)) + "t" +
               std::to_string(t(s));
    }
    int joint_p() const { return p_; }
    int joint_q() const { return q_; }
    int enc(int f, int c, int t) const { return (f * 2 + c) * cls_ + t; }

  private:
    int f(int s) const { return s / (2 * cls_); }
    int c(int s) const { return (s / cls_) % 2; }
    int t(int s) const { return s % cls_; }
    RecognizableSet sigma_, rho_;
    bool maximal_;
    int p_, q_, cls_, n_;
};

// --------------------------------------- maximal induced matchings (5 st) ---

// 0: in D, no D-neighbor yet
// 1: in D, exactly one D-neighbor
// 2: out of D, no D-neighbor, every finalized non-D neighbor is dominated
// 3: out of D, no D-neighbor, some finalized neighbor is undominated
// 4: out of D, has a D-neighbor
class MimAutomaton final : public VertexAutomaton {
  public:
    int n() const override { return 5; }
    std::vector<int> fresh() const override { return {0, 2}; }
    bool member(int s) const override { return s <= 1; }
    bool accept(int s) const override { return s == 1 || s == 2 || s == 4; }
    int add_edge_staying(int s, int other) const override {
        if (member(other)) {
            if (s == 0) return 1;
            if (s == 1) return -1;
            return 4;
        }
        return s;  // edges to staying non-members carry no information yet
    }
    int add_edge_leaving(int s, int other_final) const override {
        if (member(other_final)) {
            if (s == 0) return 1;
            if (s == 1) return -1;
            return 4;
        }
        if ((s == 2 || s == 3) && (other_final == 2 || other_final == 3)) return 3;
        return s;
    }
    std::string state_name(int s) const override {
        static const char *names[] = {"D0", "D1", "ok", "bad", "dom"};
        return names[s];
    }
};

}  // namespace

std::unique_ptr<VertexAutomaton> make_vertex_automaton(const Problem &pr) {
    switch (pr.mode) {
        case Mode::All: return std::make_unique<AllAutomaton>(pr);
        case Mode::Minimal: return std::make_unique<MinMaxAutomaton>(pr, false);
        case Mode::Maximal: return std::make_unique<MinMaxAutomaton>(pr, true);
        case Mode::SpecialMaxInducedMatching: return std::make_unique<MimAutomaton>();
        case Mode::SpecialMinDomPw2:
            throw InputError("special-min-dom-pw2 has no per-vertex machine");
    }
    throw InputError("bad mode");
}

// -------------------------------------------------------------- tuples -----

std::vector<Descriptor> all_descriptors(int k) {
    std::vector<Descriptor> out;
    for (int o = -1; o < k; o++)
        for (int m = (1 << k) - 1; m >= 0; m--)
            out.push_back({o, (unsigned)m});
    return out;
}

std::string descriptor_name(const Descriptor &d, int k) {
    std::string s = d.o < 0 ? "keep=new" : "keep=" + std::to_string(d.o);
    s += " edges=";
    for (int i = k - 1; i >= 0; i--) s += (d.edges >> i) & 1 ? '1' : '0';
    return s;
}

namespace {

class ProductTupleAutomaton final : public TupleAutomaton {
  public:
    ProductTupleAutomaton(const Problem &pr, int kk) : va_(make_vertex_automaton(pr)) {
        k = kk;
        nv_ = va_->n();
        dim_ = 1;
        for (int i = 0; i < k; i++) dim_ *= nv_;
    }
    int dim() const override { return dim_; }
    std::vector<int> initial() const override {
        std::vector<int> out;
        auto fr = va_->fresh();
        std::vector<int> idx(k, 0);
        for (;;) {
            int st = 0;
            for (int i = 0; i < k; i++) st = st * nv_ + fr[idx[i]];
            out.push_back(st);
            int i = k - 1;
            while (i >= 0 && ++idx[i] == (int)fr.size()) idx[i--] = 0;
            if (i < 0) break;
        }
        return out;
    }
    void apply(const Descriptor &d, int state, std::vector<int> &out) const override {
        std::vector<int> sv(k);
        {
            int s = state;
            for (int i = k - 1; i >= 0; i--) {
                sv[i] = s % nv_;
                s /= nv_;
            }
        }
        for (int cf : va_->fresh()) {
            if (d.o < 0) {
                // the new vertex departs; edge bit i joins it to old position i
                int ofin = cf;
                bool ok = true;
                for (int i = 0; i < k && ok; i++)
                    if ((d.edges >> i) & 1) {
                        ofin = va_->add_edge_staying(ofin, sv[i]);
                        if (ofin < 0) ok = false;
                    }
                if (!ok || !va_->accept(ofin)) continue;
                std::vector<int> nxt = sv;
                for (int i = 0; i < k && ok; i++)
                    if ((d.edges >> i) & 1) {
                        nxt[i] = va_->add_edge_leaving(nxt[i], ofin);
                        if (nxt[i] < 0) ok = false;
                    }
                if (!ok) continue;
                int st = 0;
                for (int i = 0; i < k; i++) st = st * nv_ + nxt[i];
                out.push_back(st);
            } else {
                // old position d.o departs; the new vertex takes its slot
                int ofin = sv[d.o];
                bool ok = true;
                for (int i = 0; i < k && ok; i++) {
                    if (!((d.edges >> i) & 1)) continue;
                    ofin = va_->add_edge_staying(ofin, i == d.o ? cf : sv[i]);
                    if (ofin < 0) ok = false;
                }
                if (!ok || !va_->accept(ofin)) continue;
                std::vector<int> nxt = sv;
                nxt[d.o] = cf;
                for (int i = 0; i < k && ok; i++) {
                    if (!((d.edges >> i) & 1)) continue;
                    nxt[i] = va_->add_edge_leaving(nxt[i], ofin);
                    if (nxt[i] < 0) ok = false;
                }
                if (!ok) continue;
                int st = 0;
                for (int i = 0; i < k; i++) st = st * nv_ + nxt[i];
                out.push_back(st);
            }
        }
    }
    bool complete_accept(unsigned edge_mask, int state) const override {
        std::vector<int> sv(k);
        {
            int s = state;
            for (int i = k - 1; i >= 0; i--) {
                sv[i] = s % nv_;
                s /= nv_;
            }
        }
        // pair bit order: (0,1), (0,2), ..., (0,k-1), (1,2), ...
        int bit = 0;
        std::vector<int> fin = sv;
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++, bit++) {
                if (!((edge_mask >> bit) & 1)) continue;
                int a = va_->add_edge_leaving(sv[i], sv[j]);
                int b = va_->add_edge_leaving(sv[j], sv[i]);
                if (a < 0 || b < 0) return false;
                fin[i] = a;
                fin[j] = b;
            }
        for (int i = 0; i < k; i++)
            if (!va_->accept(fin[i])) return false;
        return true;
    }
    std::string state_name(int s) const override {
        std::string out = "(";
        std::vector<int> sv(k);
        for (int i = k - 1; i >= 0; i--) {
            sv[i] = s % nv_;
            s /= nv_;
        }
        for (int i = 0; i < k; i++) {
            if (i) out += ",";
            out += va_->state_name(sv[i]);
        }
        return out + ")";
    }

  private:
    std::unique_ptr<VertexAutomaton> va_;
    int nv_, dim_;
};

// ------------------------------------------- minimal dominating, width 2 ---

// Letters for sigma = N, rho = N+ (minimal dominating sets).  Every edge of a
// separator vertex goes to an already-forgotten vertex (extension edges always
// touch the departing vertex), so neighbor bookkeeping reduces to:
//   0 Dc: in D, certificate secured (a forgotten neighbor with exactly one
//         D-neighbor, or no D-neighbor ever and still none -- see S)
//   1 S:  in D, no D-neighbor (currently self-certified; spoils to L)
//   2 L:  in D, has a D-neighbor, certificate still owed
//   3 P:  out of D, exactly one D-neighbor, reserved as the certificate of a
//         forgotten member; must not gain further D-neighbors
//   4 d:  out of D, dominated, no outstanding role
//   5 F:  out of D, no D-neighbor yet
// plus a joint state PI: both separator vertices are out of D with exactly
// one D-neighbor each (the same forgotten member), and at least one of them
// must stay at count one to serve as its certificate.
class MinDomPw2Automaton final : public TupleAutomaton {
  public:
    MinDomPw2Automaton() { k = 2; }
    static constexpr int Dc = 0, S = 1, L = 2, P = 3, d = 4, F = 5, PI = 36;
    int dim() const override { return 37; }
    std::vector<int> initial() const override {
        return {pair_state(S, S), pair_state(S, F), pair_state(F, S), pair_state(F, F)};
    }
    static int pair_state(int a, int b) { return a * 6 + b; }
    static bool mem(int l) { return l <= L; }
    // a staying vertex gains an edge to a member being finalized
    static int gains_member(int l) {
        switch (l) {
            case Dc: return Dc;
            case S: return L;
            case L: return L;
            case P: return -1;  // reserved vertex must stay at one D-neighbor
            case d: return d;
            case F: return d;
        }
        return -1;
    }

    void apply(const Descriptor &dsc, int state, std::vector<int> &out) const override {
        for (int cf = 0; cf < 2; cf++) {  // 1 = new vertex joins D
            int r = state == PI ? apply_pi(dsc, cf) : apply_pair(dsc, state, cf);
            if (r >= 0) out.push_back(r);
        }
    }

    bool complete_accept(unsigned edge_mask, int state) const override {
        bool e = edge_mask & 1;
        if (state == PI) return true;  // an edge between the two keeps both clean
        int a = state / 6, b = state % 6;
        return complete_ok(a, b, e) && complete_ok(b, a, e);
    }

    std::string state_name(int s) const override {
        static const char *ln = "DSLPdF";
        if (s == PI) return "PI";
        return std::string() + ln[s / 6] + ln[s % 6];
    }

  private:
    static bool complete_ok(int x, int y, bool e) {
        switch (x) {
            case Dc: return true;
            case S: return !(e && mem(y));  // gaining a member spoils self-certification
            case L: return e && y == F;     // y ends with exactly one D-neighbor: x's certificate
            case P: return !(e && mem(y));
            case d: return true;
            case F: return e && mem(y);
        }
        return false;
    }

    // regular pair (a,b); returns next state or -1
    int apply_pair(const Descriptor &dsc, int state, int cf) const {
        int l[2] = {state / 6, state % 6};
        if (dsc.o < 0) {
            // new vertex departs immediately; edge bit i joins it to position i
            bool eb[2] = {bool(dsc.edges & 1), bool(dsc.edges & 2)};
            int cnt = (eb[0] && mem(l[0])) + (eb[1] && mem(l[1]));
            int nl[2] = {l[0], l[1]};
            if (cf) {  // departing member
                if (cnt == 0) {
                    // self-certified; neighbors just gain a member
                    for (int i = 0; i < 2; i++)
                        if (eb[i]) {
                            nl[i] = gains_member(nl[i]);
                            if (nl[i] < 0) return -1;
                        }
                } else {
                    // owes a certificate: an adjacent F ends with exactly one
                    // D-neighbor (this vertex) and can be reserved
                    int elig = (eb[0] && l[0] == F) + (eb[1] && l[1] == F);
                    if (elig == 0) return -1;
                    if (elig == 2) return PI;
                    for (int i = 0; i < 2; i++)
                        if (eb[i]) {
                            if (l[i] == F) {
                                nl[i] = P;
                            } else {
                                nl[i] = gains_member(nl[i]);
                                if (nl[i] < 0) return -1;
                            }
                        }
                }
            } else {  // departing non-member: must be dominated now
                if (cnt == 0) return -1;
                if (cnt == 1) {
                    // this vertex certifies its unique member neighbor
                    for (int i = 0; i < 2; i++)
                        if (eb[i] && mem(l[i])) nl[i] = Dc;
                }
                // non-member edges carry no information for the kept letters
            }
            return pair_state(nl[0], nl[1]);
        }
        // old position dsc.o departs; new vertex takes that slot
        int j = dsc.o, kpos = 1 - j;
        int lo = l[j], lk = l[kpos];
        bool e_n = (dsc.edges >> j) & 1;   // edge departing -- new vertex
        bool e_k = (dsc.edges >> kpos) & 1;  // edge departing -- kept vertex
        int nk = lk;  // kept letter after the step
        int nn;       // new-vertex letter
        if (mem(lo)) {
            int cnt_new = (e_k && mem(lk)) + (e_n && cf);
            bool settled = lo == Dc || (lo == S && cnt_new == 0);
            int reserve = -1;  // 0 = kept, 1 = new, 2 = both
            if (!settled) {
                bool ek_elig = e_k && lk == F;
                bool en_elig = e_n && !cf;
                if (!ek_elig && !en_elig) return -1;
                if (ek_elig && en_elig) return PI;
                reserve = ek_elig ? 0 : 1;
            }
            if (e_k) {
                if (reserve == 0) {
                    nk = P;
                } else {
                    nk = gains_member(nk);
                    if (nk < 0) return -1;
                }
            }
            if (cf) {
                nn = e_n ? L : S;
            } else {
                nn = e_n ? (reserve == 1 ? P : d) : F;
            }
        } else {
            int cnt_new = (e_k && mem(lk)) + (e_n && cf);
            if (lo == P) {
                if (cnt_new > 0) return -1;
            } else if (lo == F) {
                if (cnt_new == 0) return -1;  // never dominated
                if (cnt_new == 1) {
                    // the departing vertex certifies its unique member neighbor
                    if (e_k && mem(lk)) nk = Dc;
                    // (if the unique member is the new vertex, it is secured below)
                }
            }
            // lo == d: already settled
            bool secure_new = lo == F && cnt_new == 1 && e_n && cf;
            if (cf) {
                nn = secure_new ? Dc : S;  // no member edge from a non-member departer
            } else {
                nn = F;
            }
        }
        int nl[2];
        nl[j] = nn;
        nl[kpos] = nk;
        return pair_state(nl[0], nl[1]);
    }

    // joint state: both positions out of D, one D-neighbor each (a shared
    // forgotten member), at least one must end with exactly one D-neighbor
    int apply_pi(const Descriptor &dsc, int cf) const {
        if (dsc.o < 0) {
            bool eb[2] = {bool(dsc.edges & 1), bool(dsc.edges & 2)};
            if (!cf) return -1;  // an isolated-from-members new vertex is undominated
            // departing member with no member neighbors: self-certified
            if (eb[0] && eb[1]) return -1;  // both spoiled, nobody serves
            if (!eb[0] && !eb[1]) return PI;
            int spoiled = eb[0] ? 0 : 1;
            int nl[2];
            nl[spoiled] = d;
            nl[1 - spoiled] = P;
            return pair_state(nl[0], nl[1]);
        }
        int j = dsc.o, kpos = 1 - j;
        bool e_n = (dsc.edges >> j) & 1;
        int nl[2];
        if (e_n && cf) {
            // departing vertex gains a second D-neighbor: spoiled but
            // dominated; the other one carries the obligation alone
            nl[kpos] = P;
            nl[j] = S;  // the new member: count 0 (its only edge is to a non-member)
        } else {
            // departing vertex stays at one D-neighbor: it is the certificate
            nl[kpos] = d;
            nl[j] = cf ? S : (e_n ? F : F);
        }
        return pair_state(nl[0], nl[1]);
    }
};

}  // namespace

std::unique_ptr<TupleAutomaton> make_tuple_automaton(const Problem &pr, int k) {
    if (k < 1 || k > 2) throw InputError("separator width must be 1 or 2");
    if (pr.mode == Mode::SpecialMinDomPw2) {
        if (k != 2) throw InputError("special-min-dom-pw2 needs width 2");
        return std::make_unique<MinDomPw2Automaton>();
    }
    auto t = std::make_unique<ProductTupleAutomaton>(pr, k);
    return t;
}

}  // namespace domcert
