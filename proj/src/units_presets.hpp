#pragma once

#include <array>
#include <string>
#include <vector>

#include "error.hpp"

namespace dmorse {

// Molecule constants as quoted in spectroscopic tables: dissociation energy
// in eV, equilibrium distance in Angstrom, reduced mass in amu, width in
// 1/Angstrom.
struct MoleculePreset {
    std::string name;
    double D_eV = 0.0;
    double r0_angstrom = 0.0;
    double m0_amu = 0.0;
    double a_width = 0.0; // 1/Angstrom
};

MoleculePreset co_preset();

// How the quoted numbers are read into the solver's internal hbar = c = 1
// system. The reference table's unit statement is ambiguous, so the library
// enumerates a fixed set of readings instead of fitting a scale factor.
enum class UnitConvention {
    raw_numbers,    // quoted values used verbatim
    hartree_atomic, // Hartree / Bohr / electron masses
    amu_mass_unit,  // energies in amu c^2, lengths in hbar/(amu c)
};

// Pinned conversion factors (sources in the README).
inline constexpr double kEvPerHartree = 27.211386;
inline constexpr double kAngstromPerBohr = 0.529177211;
inline constexpr double kElectronMassPerAmu = 1822.888486;
inline constexpr double kEvPerAmuC2 = 931.49410242e6;
inline constexpr double kHbarCEvAngstrom = 1973.269804;

struct InternalParams {
    double D = 0.0;
    double r0 = 0.0;
    double a = 0.0;
    double m0 = 0.0;
};

InternalParams to_internal(const MoleculePreset& preset,
                           UnitConvention convention);

// Inverse of to_internal (round-trip support).
MoleculePreset to_preset_units(const InternalParams& params,
                               UnitConvention convention,
                               const std::string& name = "custom");

// One reference row of negative PDM bound energies for CO: quantum labels
// plus |E| as tabulated.
struct ReferenceRow {
    int ell_tilde = 0;
    int n = 0; // as printed in the reference table
    int kappa = 0;
    const char* state = "";
    double abs_energy = 0.0;
};

const std::array<ReferenceRow, 4>& co_reference_rows();

enum class ScanStatus { matched, mismatch, empty_domain, no_root };

struct ScanEntry {
    UnitConvention convention = UnitConvention::raw_numbers;
    int row = 0;          // index into co_reference_rows()
    int n = 0;            // polynomial-degree interpretation tried (0 or 1)
    ScanStatus status = ScanStatus::no_root;
    double energy = 0.0;        // best root when one exists
    double rel_deviation = 0.0; // | |E| - target | / target, when a root exists
    double residual = 0.0;      // solver residual at the reported root
};

struct ScanReport {
    std::vector<ScanEntry> entries; // convention-major, then row, then n
    bool any_matched = false;
    // Convention whose worst row deviation is smallest among conventions that
    // matched all rows; meaningful only when any_matched.
    UnitConvention best = UnitConvention::raw_numbers;
    double best_max_deviation = 0.0;
};

// Runs the PDM solver for every (convention, reference row, n in {0,1})
// combination and classifies the outcome. The spectrum reference lists |E|
// for negative-branch states, so roots are compared through their absolute
// value at a 1e-3 relative gate. Failures are data, not errors.
ScanReport convention_scan(const MoleculePreset& preset);

const char* convention_name(UnitConvention c);
const char* scan_status_name(ScanStatus s);

} // namespace dmorse
