#include "domcert/recognizable.hpp"

#include <numeric>
#include <sstream>

namespace domcert {

int tau(int p, int q, long n) { return n < p ? (int)n : (int)((n - p) % q) + p; }

RecognizableSet RecognizableSet::from_bits(int p, int q, std::vector<char> bits) {
    if (q < 1 || p < 0 || (int)bits.size() != p + q) throw InputError("bad recognizable set shape");
    // minimal period of the tail
    int q2 = q;
    for (int d = 1; d <= q; d++) {
        if (q % d) continue;
        bool ok = true;
        for (int i = 0; i < q && ok; i++) ok = bits[p + i % d] == bits[p + i];
        if (ok) {
            q2 = d;
            break;
        }
    }
    auto val = [&](long n) { return bits[tau(p, q, n)]; };
    // minimal preperiod: least p2 with val(n+q2) == val(n) for all n >= p2
    int p2 = p;
    while (p2 > 0 && val(p2 - 1) == val(p2 - 1 + q2)) p2--;
    RecognizableSet s;
    s.p = p2;
    s.q = q2;
    s.table.resize(p2 + q2);
    for (int n = 0; n < p2 + q2; n++) s.table[n] = val(n);
    return s;
}

bool RecognizableSet::empty() const {
    for (char b : table)
        if (b) return false;
    return true;
}

bool RecognizableSet::is_all_naturals() const { return p == 0 && q == 1 && table[0]; }

RecognizableSet RecognizableSet::parse(const std::string &text_in) {
    std::string s;
    for (char c : text_in)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw InputError("empty set spec");
    if (s == "N") return from_bits(0, 1, {1});
    if (s == "N+") return from_bits(1, 1, {0, 1});
    if (s.front() == '{') {
        if (s.back() != '}') throw InputError("unbalanced braces in set spec: " + text_in);
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) return from_bits(0, 1, {0});  // {}
    // comma list of "a" or "a+q*k"
    struct Term {
        long a;
        long step;  // 0 for a singleton
    };
    std::vector<Term> terms;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InputError("empty term in set spec: " + text_in);
        auto plus = item.find('+', 1);
        Term t{0, 0};
        if (plus == std::string::npos) {
            t.a = std::stol(item);
        } else {
            t.a = std::stol(item.substr(0, plus));
            std::string rest = item.substr(plus + 1);
            auto star = rest.find("*k");
            if (star == std::string::npos || star + 2 != rest.size())
                throw InputError("bad periodic term (want a+q*k): " + item);
            t.step = std::stol(rest.substr(0, star));
            if (t.step < 1) throw InputError("bad period in term: " + item);
        }
        if (t.a < 0) throw InputError("negative element in set spec: " + text_in);
        terms.push_back(t);
    }
    long q = 1, p = 0;
    for (const auto &t : terms) {
        if (t.step)
            q = std::lcm(q, t.step);
        p = std::max(p, t.step ? t.a : t.a + 1);
    }
    std::vector<char> bits(p + q, 0);
    auto member = [&](long n) {
        for (const auto &t : terms) {
            if (t.step == 0 && n == t.a) return true;
            if (t.step != 0 && n >= t.a && (n - t.a) % t.step == 0) return true;
        }
        return false;
    };
    for (long n = 0; n < p + q; n++) bits[n] = member(n);
    return from_bits((int)p, (int)q, bits);
}

std::string RecognizableSet::str() const {
    if (is_all_naturals()) return "N";
    if (p == 1 && q == 1 && !table[0] && table[1]) return "N+";
    std::ostringstream os;
    bool finite = true;
    for (int i = p; i < p + q; i++)
        if (table[i]) finite = false;
    bool first = true;
    auto emit = [&](const std::string &t) {
        if (!first) os << ",";
        os << t;
        first = false;
    };
    if (finite) os << "{";
    for (int i = 0; i < p; i++)
        if (table[i]) emit(std::to_string(i));
    if (!finite)
        for (int r = 0; r < q; r++)
            if (table[p + r]) emit(std::to_string(p + r) + "+" + std::to_string(q) + "*k");
    if (finite) os << "}";
    return os.str();
}

void joint_period(const RecognizableSet &sigma, const RecognizableSet &rho, int &p, int &q) {
    p = std::max(sigma.p, rho.p) + 1;
    long q0 = std::lcm((long)sigma.q, (long)rho.q);
    auto works = [&](int qq) {
        for (long n = 0; n <= p + 3L * qq; n++) {
            for (long m = n + 1; m <= p + 3L * qq; m++) {
                if (tau(p, qq, n) != tau(p, qq, m)) continue;
                if (sigma.contains(n) != sigma.contains(m)) return false;
                if (rho.contains(n) != rho.contains(m)) return false;
                if (n >= 1 && m >= 1) {
                    if (sigma.contains(n - 1) != sigma.contains(m - 1)) return false;
                    if (rho.contains(n - 1) != rho.contains(m - 1)) return false;
                }
            }
        }
        return true;
    };
    q = (int)q0;
    for (long d = 1; d <= q0; d++) {
        if (q0 % d) continue;
        if (works((int)d)) {
            q = (int)d;
            return;
        }
    }
}

}  // namespace domcert
