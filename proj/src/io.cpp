#include "hypercube/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hypercube {

namespace {

int parse_header(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(origin, 1, "missing header line \"n <arity>\"");
    if (line.size() < 3 || line[0] != 'n' || line[1] != ' ')
        throw ParseError(origin, 1, "header must be \"n <arity>\", got \"" + line + "\"");
    int n = 0;
    auto [ptr, ec] = std::from_chars(line.data() + 2, line.data() + line.size(), n);
    if (ec != std::errc() || ptr != line.data() + line.size())
        throw ParseError(origin, 1, "bad arity \"" + line.substr(2) + "\"");
    try {
        check_arity(n);
    } catch (const std::exception& e) {
        throw ParseError(origin, 1, e.what());
    }
    return n;
}

void expect_no_trailing_content(std::istream& in, const std::string& origin, int next_line) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError(origin, next_line, "unexpected extra content \"" + line + "\"");
        ++next_line;
    }
}

}  // namespace

BooleanFunction read_bfn(std::istream& in, const std::string& origin) {
    const int n = parse_header(in, origin);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(origin, 2, "missing truth-table line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::uint64_t expect = std::uint64_t(1) << n;
    if (line.size() != expect)
        throw ParseError(origin, 2,
                         "expected " + std::to_string(expect) + " table characters, got " +
                             std::to_string(line.size()));
    BooleanFunction f(n);
    for (std::uint64_t i = 0; i < expect; ++i) {
        if (line[i] == '1')
            f.set_bit(i, true);
        else if (line[i] != '0')
            throw ParseError(origin, 2, std::string("table character at position ") +
                                            std::to_string(i) + " must be 0 or 1, got '" +
                                            line[i] + "'");
    }
    expect_no_trailing_content(in, origin, 3);
    return f;
}

BooleanFunction read_bfn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_bfn(in, path);
}

std::string table_bits(const BooleanFunction& f) {
    std::string t(f.size(), '0');
    for (point_index p = 0; p < f.size(); ++p)
        if (f.bit(p)) t[p] = '1';
    return t;
}

void write_bfn(std::ostream& out, const BooleanFunction& f) {
    out << "n " << f.arity() << "\n" << table_bits(f) << "\n";
}

void write_bfn_file(const std::string& path, const BooleanFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_bfn(out, f);
}

std::string to_bfn_string(const BooleanFunction& f) {
    std::ostringstream os;
    write_bfn(os, f);
    return os.str();
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

Spectrum read_spec(std::istream& in, const std::string& origin) {
    const int n = parse_header(in, origin);
    Spectrum s;
    s.n = n;
    s.coeffs.assign(std::size_t(1) << n, 0.0);
    std::string line;
    for (std::uint64_t want = 0; want < s.coeffs.size(); ++want) {
        const int lineno = int(want) + 2;
        if (!std::getline(in, line))
            throw ParseError(origin, lineno, "missing line for mask " + std::to_string(want));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::uint64_t mask = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), mask);
        if (ec != std::errc() || ptr == line.data() || ptr == line.data() + line.size() ||
            *ptr != ' ')
            throw ParseError(origin, lineno, "expected \"mask coefficient\", got \"" + line + "\"");
        if (mask != want)
            throw ParseError(origin, lineno, "mask " + std::to_string(mask) +
                                                 " out of order, expected " + std::to_string(want));
        const char* val = ptr + 1;
        double c = 0.0;
        auto [vptr, vec] = std::from_chars(val, line.data() + line.size(), c);
        if (vec != std::errc() || vptr != line.data() + line.size())
            throw ParseError(origin, lineno,
                             "bad coefficient \"" + std::string(val) + "\"");
        s.coeffs[mask] = c;
    }
    expect_no_trailing_content(in, origin, int(s.coeffs.size()) + 2);
    return s;
}

Spectrum read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_spec(in, path);
}

void write_spec(std::ostream& out, const Spectrum& s) {
    out << "n " << s.n << "\n";
    for (std::size_t m = 0; m < s.coeffs.size(); ++m)
        out << m << " " << format_double(s.coeffs[m]) << "\n";
}

void write_spec_file(const std::string& path, const Spectrum& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_spec(out, s);
}

}  // namespace hypercube
