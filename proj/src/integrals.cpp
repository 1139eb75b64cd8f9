#include "fvo/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fvo/errors.hpp"

namespace fvo {

namespace {

constexpr double duplicate_tolerance = 1e-10;

std::uint64_t pack2(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 16) | static_cast<std::uint64_t>(b);
}

}  // namespace

MOIntegrals::MOIntegrals(int n_orbitals, int n_electrons, int ms2)
    : n_orbitals_(n_orbitals), n_electrons_(n_electrons), ms2_(ms2) {
    if (n_orbitals <= 0) throw UsageError("orbital count must be positive");
    if (n_electrons < 0) throw UsageError("electron count must be non-negative");
}

void MOIntegrals::check_index(int p) const {
    if (p < 0 || p >= n_orbitals_)
        throw UsageError("orbital index " + std::to_string(p + 1) + " out of range 1.." +
                         std::to_string(n_orbitals_));
}

std::uint64_t MOIntegrals::h_key(int p, int q) {
    if (p < q) std::swap(p, q);
    return pack2(p, q);
}

std::uint64_t MOIntegrals::eri_key(int p, int q, int r, int s) {
    if (p < q) std::swap(p, q);
    if (r < s) std::swap(r, s);
    if (p < r || (p == r && q < s)) {
        std::swap(p, r);
        std::swap(q, s);
    }
    return (pack2(p, q) << 32) | pack2(r, s);
}

double MOIntegrals::get_h(int p, int q) const {
    check_index(p);
    check_index(q);
    auto it = h_core_.find(h_key(p, q));
    return it == h_core_.end() ? 0.0 : it->second;
}

void MOIntegrals::set_h(int p, int q, double value) {
    check_index(p);
    check_index(q);
    h_core_[h_key(p, q)] = value;
}

double MOIntegrals::get_eri(int p, int q, int r, int s) const {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    auto it = eri_.find(eri_key(p, q, r, s));
    return it == eri_.end() ? 0.0 : it->second;
}

void MOIntegrals::set_eri(int p, int q, int r, int s, double value) {
    check_index(p);
    check_index(q);
    check_index(r);
    check_index(s);
    eri_[eri_key(p, q, r, s)] = value;
}

void MOIntegrals::set_orbital_energies(std::vector<double> eps) {
    if (static_cast<int>(eps.size()) != n_orbitals_)
        throw UsageError("orbital energy vector length does not match orbital count");
    orbital_energies_ = std::move(eps);
}

std::vector<std::pair<std::uint64_t, double>> MOIntegrals::canonical_h_entries() const {
    std::vector<std::pair<std::uint64_t, double>> out(h_core_.begin(), h_core_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::uint64_t, double>> MOIntegrals::canonical_eri_entries() const {
    std::vector<std::pair<std::uint64_t, double>> out(eri_.begin(), eri_.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// FCIDUMP headers mix separators freely; normalize to spaced tokens.
std::string normalize_header(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == ',' || c == '=')
            out += c == '=' ? std::string(" = ") : std::string(" ");
        else
            out += c;
    }
    return out;
}

double parse_fortran_double(const std::string& token, long line_no) {
    std::string t = token;
    for (char& c : t)
        if (c == 'D' || c == 'd') c = 'E';
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a numeric value, got '" + token + "'", line_no);
    }
    if (pos != t.size())
        throw ParseError("trailing characters in numeric value '" + token + "'", line_no);
    return v;
}

long parse_int(const std::string& token, long line_no) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + token + "'", line_no);
    }
    if (pos != token.size())
        throw ParseError("trailing characters in integer '" + token + "'", line_no);
    return v;
}

struct HeaderFields {
    long norb = -1;
    long nelec = -1;
    long ms2 = 0;
    bool has_ms2 = false;
};

}  // namespace

MOIntegrals parse_fcidump(std::istream& source) {
    std::string line;
    long line_no = 0;

    // ---- namelist header ----
    std::string header;
    bool in_header = false;
    bool header_done = false;
    while (!header_done && std::getline(source, line)) {
        ++line_no;
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (!in_header) {
            if (trimmed.compare(first, 4, "&FCI") != 0)
                throw ParseError("FCIDUMP must begin with an &FCI namelist", line_no);
            in_header = true;
        }
        header += " " + trimmed;
        auto end_pos = header.find("&END");
        if (end_pos == std::string::npos) end_pos = header.find("$END");
        if (end_pos != std::string::npos) {
            header = header.substr(0, end_pos);
            header_done = true;
        } else if (auto slash = header.find('/'); slash != std::string::npos) {
            header = header.substr(0, slash);
            header_done = true;
        }
    }
    if (!in_header) throw ParseError("empty stream, no &FCI namelist found", line_no);
    if (!header_done) throw ParseError("unterminated &FCI namelist", line_no);

    HeaderFields fields;
    {
        std::istringstream hs(normalize_header(header));
        std::string tok;
        std::string pending_key;
        bool expecting_value = false;
        while (hs >> tok) {
            if (tok == "&FCI") continue;
            if (tok == "=") {
                expecting_value = true;
                continue;
            }
            if (expecting_value) {
                // only the first value after `KEY =` matters; ORBSYM carries
                // a list which is parsed and ignored
                if (pending_key == "NORB")
                    fields.norb = parse_int(tok, line_no);
                else if (pending_key == "NELEC")
                    fields.nelec = parse_int(tok, line_no);
                else if (pending_key == "MS2") {
                    fields.ms2 = parse_int(tok, line_no);
                    fields.has_ms2 = true;
                }
                expecting_value = false;
                pending_key.clear();
                continue;
            }
            bool numeric = !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) ||
                                            tok[0] == '-' || tok[0] == '+');
            if (!numeric) pending_key = tok;
        }
    }
    if (fields.norb <= 0)
        throw ParseError("header is missing a positive NORB", line_no);
    if (fields.nelec < 0)
        throw ParseError("header is missing NELEC", line_no);
    if (fields.has_ms2 && fields.ms2 != 0)
        throw ParseError("only closed-shell files are supported (MS2 must be 0, got " +
                             std::to_string(fields.ms2) + ")",
                         line_no);
    if (fields.nelec % 2 != 0)
        throw ParseError("only closed-shell files are supported (NELEC must be even, got " +
                             std::to_string(fields.nelec) + ")",
                         line_no);

    MOIntegrals ints(static_cast<int>(fields.norb), static_cast<int>(fields.nelec),
                     static_cast<int>(fields.ms2));
    std::vector<double> eps(ints.n_orbitals(), 0.0);
    std::vector<bool> eps_seen(ints.n_orbitals(), false);
    bool any_eps = false;

    auto check_file_index = [&](long idx) {
        if (idx < 0 || idx > fields.norb)
            throw ParseError("orbital index " + std::to_string(idx) + " outside 0.." +
                                 std::to_string(fields.norb),
                             line_no);
    };

    std::unordered_map<std::uint64_t, double> seen_h, seen_eri;
    auto store_checked = [&](auto& seen, std::uint64_t key, auto& setter, double value,
                             const char* what) {
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (std::abs(it->second - value) > duplicate_tolerance)
                throw ParseError(std::string("inconsistent duplicate ") + what + " entry (" +
                                     std::to_string(it->second) + " vs " + std::to_string(value) +
                                     ")",
                                 line_no);
            return;  // consistent duplicate, first value wins
        }
        seen.emplace(key, value);
        setter(value);
    };

    // ---- body ----
    while (std::getline(source, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string vtok;
        if (!(ls >> vtok)) continue;  // blank line
        double value = parse_fortran_double(vtok, line_no);
        long i, j, k, l;
        std::string itok, jtok, ktok, ltok;
        if (!(ls >> itok >> jtok >> ktok >> ltok))
            throw ParseError("expected `value i j k l`", line_no);
        i = parse_int(itok, line_no);
        j = parse_int(jtok, line_no);
        k = parse_int(ktok, line_no);
        l = parse_int(ltok, line_no);
        std::string extra;
        if (ls >> extra)
            throw ParseError("unexpected trailing token '" + extra + "'", line_no);
        check_file_index(i);
        check_file_index(j);
        check_file_index(k);
        check_file_index(l);

        if (i > 0 && j > 0 && k > 0 && l > 0) {
            auto set = [&](double v) {
                ints.set_eri(int(i - 1), int(j - 1), int(k - 1), int(l - 1), v);
            };
            store_checked(seen_eri,
                          MOIntegrals::eri_key(int(i - 1), int(j - 1), int(k - 1), int(l - 1)),
                          set, value, "two-electron");
        } else if (i > 0 && j > 0 && k == 0 && l == 0) {
            auto set = [&](double v) { ints.set_h(int(i - 1), int(j - 1), v); };
            store_checked(seen_h, MOIntegrals::h_key(int(i - 1), int(j - 1)), set, value,
                          "one-electron");
        } else if (i > 0 && j == 0 && k == 0 && l == 0) {
            int p = static_cast<int>(i - 1);
            if (eps_seen[p] && std::abs(eps[p] - value) > duplicate_tolerance)
                throw ParseError("inconsistent duplicate orbital energy for orbital " +
                                     std::to_string(i),
                                 line_no);
            eps[p] = value;
            eps_seen[p] = true;
            any_eps = true;
        } else if (i == 0 && j == 0 && k == 0 && l == 0) {
            ints.set_e_nuclear(value);
        } else {
            throw ParseError("unrecognized index pattern " + std::to_string(i) + " " +
                                 std::to_string(j) + " " + std::to_string(k) + " " +
                                 std::to_string(l),
                             line_no);
        }
    }

    if (any_eps) {
        for (int p = 0; p < ints.n_orbitals(); ++p)
            if (!eps_seen[p])
                throw ParseError("orbital energies present but missing for orbital " +
                                     std::to_string(p + 1),
                                 line_no);
        ints.set_orbital_energies(std::move(eps));
    }
    return ints;
}

MOIntegrals parse_fcidump_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open FCIDUMP file: " + path);
    return parse_fcidump(in);
}

namespace {

void unpack_eri(std::uint64_t key, int& p, int& q, int& r, int& s) {
    p = static_cast<int>((key >> 48) & 0xffff);
    q = static_cast<int>((key >> 32) & 0xffff);
    r = static_cast<int>((key >> 16) & 0xffff);
    s = static_cast<int>(key & 0xffff);
}

void emit_line(std::ostream& out, double v, int i, int j, int k, int l) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), " % .16E %3d %3d %3d %3d\n", v, i, j, k, l);
    out << buf;
}

}  // namespace

void serialize_fcidump(const MOIntegrals& ints, std::ostream& out) {
    out << "&FCI NORB=" << ints.n_orbitals() << ",NELEC=" << ints.n_electrons()
        << ",MS2=" << ints.ms2() << ",\n  ORBSYM=";
    for (int p = 0; p < ints.n_orbitals(); ++p) out << "1,";
    out << "\n  ISYM=1,\n&END\n";
    for (const auto& [key, value] : ints.canonical_eri_entries()) {
        int p, q, r, s;
        unpack_eri(key, p, q, r, s);
        emit_line(out, value, p + 1, q + 1, r + 1, s + 1);
    }
    for (const auto& [key, value] : ints.canonical_h_entries()) {
        int p = static_cast<int>(key >> 16);
        int q = static_cast<int>(key & 0xffff);
        emit_line(out, value, p + 1, q + 1, 0, 0);
    }
    if (ints.orbital_energies())
        for (int p = 0; p < ints.n_orbitals(); ++p)
            emit_line(out, (*ints.orbital_energies())[p], p + 1, 0, 0, 0);
    emit_line(out, ints.e_nuclear(), 0, 0, 0, 0);
}

}  // namespace fvo
