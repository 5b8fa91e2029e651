#include "domcert/certificate.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace domcert {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string hash_hex(uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// reads the next meaningful line (skipping blanks and '#' comments)
bool next_line(std::istream &in, std::string &out) {
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        out = t;
        return true;
    }
    return false;
}

std::string expect_section(std::istream &in, const std::string &key) {
    std::string line;
    if (!next_line(in, line)) throw InputError("certificate truncated before " + key);
    if (line.rfind(key, 0) != 0) throw InputError("expected " + key + ", got: " + line);
    return trim(line.substr(key.size()));
}

}  // namespace

FieldPtr parse_field_header(const std::string &text) {
    size_t mp = text.find("minpoly:");
    size_t iv = text.find("; interval:");
    if (mp == std::string::npos || iv == std::string::npos)
        throw InputError("malformed field header: " + text);
    std::string coeffs_part = trim(text.substr(mp + 8, iv - mp - 8));
    if (coeffs_part.size() < 2 || coeffs_part.front() != '[' || coeffs_part.back() != ']')
        throw InputError("malformed minpoly list: " + coeffs_part);
    std::vector<Rational> coeffs;
    std::stringstream cs(coeffs_part.substr(1, coeffs_part.size() - 2));
    std::string tok;
    while (std::getline(cs, tok, ',')) coeffs.push_back(parse_rational(trim(tok)));
    std::istringstream rest(text.substr(iv + 11));
    std::string lo, hi;
    if (!(rest >> lo >> hi)) throw InputError("malformed field interval: " + text);
    return AlgebraicField::make(coeffs, parse_rational(lo), parse_rational(hi));
}

AlgVector parse_alg_vector(const FieldPtr &f, const std::string &line) {
    AlgVector v;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(AlgebraicNumber::parse(f, trim(tok)));
    if (v.empty()) throw InputError("empty vector line");
    return v;
}

std::string format_alg_vector(const AlgVector &v) {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out;
}

std::string format_certificate(const Certificate &cert) {
    std::ostringstream os;
    os << "domcert certificate v1\n";
    os << "FIELD " << cert.field->header() << "\n";
    os << "ALPHA " << cert.alpha.str() << "\n";
    os << "PROBLEM " << cert.problem.str() << "; class=" << cert.graph_class << "\n";
    os << "SYSTEM-HASH " << hash_hex(cert.system_hash) << "\n";
    os << "CONSTANT " << cert.constant.str() << "\n";
    for (size_t i = 0; i < cert.state_names.size(); i++)
        os << "# coordinate " << i << ": " << cert.state_names[i] << "\n";
    os << "SEEDS " << cert.seeds.size() << "\n";
    for (const auto &s : cert.seeds) os << format_alg_vector(s) << "\n";
    os << "X " << cert.X.size() << "\n";
    for (const auto &x : cert.X) os << format_alg_vector(x) << "\n";
    os << "END\n";
    return os.str();
}

Certificate parse_certificate(std::istream &in) {
    std::string line;
    if (!next_line(in, line) || line != "domcert certificate v1")
        throw InputError("not a certificate file");
    Certificate cert;
    cert.field = parse_field_header(expect_section(in, "FIELD"));
    cert.alpha = AlgebraicNumber::parse(cert.field, expect_section(in, "ALPHA"));
    {
        std::string prob = expect_section(in, "PROBLEM");
        size_t cls = prob.rfind("; class=");
        if (cls == std::string::npos) throw InputError("PROBLEM line lacks a class");
        cert.graph_class = trim(prob.substr(cls + 8));
        cert.problem = Problem::parse(trim(prob.substr(0, cls)));
    }
    {
        std::string h = expect_section(in, "SYSTEM-HASH");
        cert.system_hash = std::stoull(h, nullptr, 16);
    }
    cert.constant = AlgebraicNumber::parse(cert.field, expect_section(in, "CONSTANT"));
    size_t nseeds = std::stoul(expect_section(in, "SEEDS"));
    for (size_t i = 0; i < nseeds; i++) {
        if (!next_line(in, line)) throw InputError("certificate truncated in SEEDS");
        cert.seeds.push_back(parse_alg_vector(cert.field, line));
    }
    size_t nx = std::stoul(expect_section(in, "X"));
    for (size_t i = 0; i < nx; i++) {
        if (!next_line(in, line)) throw InputError("certificate truncated in X");
        cert.X.push_back(parse_alg_vector(cert.field, line));
    }
    if (!next_line(in, line) || line != "END") throw InputError("certificate missing END");
    return cert;
}

Certificate load_certificate(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open certificate file: " + path);
    return parse_certificate(in);
}

void save_certificate(const Certificate &cert, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write certificate file: " + path);
    out << format_certificate(cert);
}

std::vector<AlgVector> parse_vector_lines(std::istream &in, const FieldPtr &f) {
    std::vector<AlgVector> out;
    std::string line;
    while (next_line(in, line)) out.push_back(parse_alg_vector(f, line));
    return out;
}

std::vector<AlgVector> load_vector_file(const std::string &path, const FieldPtr &f) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open vector file: " + path);
    return parse_vector_lines(in, f);
}

}  // namespace domcert
