#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

namespace fvo {

/// Sparse, symmetric store of molecular-orbital integrals (Hartree).
///
/// Only canonically ordered keys are kept: p >= q for the one-electron map,
/// and p >= q, r >= s, (p,q) >= (r,s) for the two-electron map, so the
/// hermitian / 8-fold permutation symmetry is a property of the storage
/// rather than a convention callers must remember.  Indices are 0-based
/// internally; the FCIDUMP layer converts from the 1-based file convention.
class MOIntegrals {
  public:
    MOIntegrals() = default;
    MOIntegrals(int n_orbitals, int n_electrons, int ms2 = 0);

    int n_orbitals() const { return n_orbitals_; }
    int n_electrons() const { return n_electrons_; }
    int ms2() const { return ms2_; }

    double e_nuclear() const { return e_nuclear_; }
    void set_e_nuclear(double e) { e_nuclear_ = e; }

    /// One-electron integral h_pq; unset entries read as zero.
    double get_h(int p, int q) const;
    void set_h(int p, int q, double value);

    /// Two-electron integral (pq|rs), chemists' notation; any of the eight
    /// equivalent index orders reads back the identical stored value.
    double get_eri(int p, int q, int r, int s) const;
    void set_eri(int p, int q, int r, int s, double value);

    const std::optional<std::vector<double>>& orbital_energies() const {
        return orbital_energies_;
    }
    void set_orbital_energies(std::vector<double> eps);

    std::size_t h_entry_count() const { return h_core_.size(); }
    std::size_t eri_entry_count() const { return eri_.size(); }

    /// Canonical (key, value) views used by the serializer and round-trip
    /// tests; deterministic ascending-key order.
    std::vector<std::pair<std::uint64_t, double>> canonical_h_entries() const;
    std::vector<std::pair<std::uint64_t, double>> canonical_eri_entries() const;

    static std::uint64_t h_key(int p, int q);
    static std::uint64_t eri_key(int p, int q, int r, int s);

  private:
    void check_index(int p) const;

    int n_orbitals_ = 0;
    int n_electrons_ = 0;
    int ms2_ = 0;
    double e_nuclear_ = 0.0;
    std::unordered_map<std::uint64_t, double> h_core_;
    std::unordered_map<std::uint64_t, double> eri_;
    std::optional<std::vector<double>> orbital_energies_;
};

/// Parse an FCIDUMP stream (Knowles-Handy conventions).
///
/// Header: a namelist opened by `&FCI` carrying NORB, NELEC and MS2,
/// terminated by `&END` or `/`; comma- or whitespace-separated, Fortran `D`
/// exponents accepted.  Body lines are `value i j k l` with 1-based indices:
/// all indices positive -> (ij|kl); `i j 0 0` -> h_ij; `i 0 0 0` -> orbital
/// energy; `0 0 0 0` -> nuclear repulsion.  Only closed-shell files
/// (MS2 = 0, even NELEC) are accepted.  Duplicate entries for the same
/// canonical key must agree within 1e-10.
MOIntegrals parse_fcidump(std::istream& source);

/// Convenience overload; throws IoError when the file cannot be opened.
MOIntegrals parse_fcidump_file(const std::string& path);

/// Emit the same FCIDUMP format (full double precision, canonical order).
void serialize_fcidump(const MOIntegrals& ints, std::ostream& out);

}  // namespace fvo
