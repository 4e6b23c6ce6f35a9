#include "units_presets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eigensolver.hpp"
#include "morse_model.hpp"

namespace dmorse {

MoleculePreset co_preset() {
    return {"CO", 11.2256, 1.1283, 6.8606719, 2.59441};
}

namespace {

// Length unit of the amu convention expressed in Angstrom: hbar/(amu c).
double amu_length_angstrom() { return kHbarCEvAngstrom / kEvPerAmuC2; }

} // namespace

InternalParams to_internal(const MoleculePreset& preset,
                           UnitConvention convention) {
    if (!(preset.D_eV > 0.0) || !(preset.r0_angstrom > 0.0) ||
        !(preset.m0_amu > 0.0) || !(preset.a_width > 0.0))
        fail(errc::invalid_argument, "to_internal: preset values must be positive");
    InternalParams p;
    switch (convention) {
    case UnitConvention::raw_numbers:
        p.D = preset.D_eV;
        p.r0 = preset.r0_angstrom;
        p.a = preset.a_width;
        p.m0 = preset.m0_amu;
        break;
    case UnitConvention::hartree_atomic:
        p.D = preset.D_eV / kEvPerHartree;
        p.r0 = preset.r0_angstrom / kAngstromPerBohr;
        p.a = preset.a_width * kAngstromPerBohr;
        p.m0 = preset.m0_amu * kElectronMassPerAmu;
        break;
    case UnitConvention::amu_mass_unit: {
        const double ell = amu_length_angstrom();
        p.D = preset.D_eV / kEvPerAmuC2;
        p.r0 = preset.r0_angstrom / ell;
        p.a = preset.a_width * ell;
        p.m0 = preset.m0_amu;
        break;
    }
    }
    return p;
}

MoleculePreset to_preset_units(const InternalParams& params,
                               UnitConvention convention,
                               const std::string& name) {
    MoleculePreset preset;
    preset.name = name;
    switch (convention) {
    case UnitConvention::raw_numbers:
        preset.D_eV = params.D;
        preset.r0_angstrom = params.r0;
        preset.a_width = params.a;
        preset.m0_amu = params.m0;
        break;
    case UnitConvention::hartree_atomic:
        preset.D_eV = params.D * kEvPerHartree;
        preset.r0_angstrom = params.r0 * kAngstromPerBohr;
        preset.a_width = params.a / kAngstromPerBohr;
        preset.m0_amu = params.m0 / kElectronMassPerAmu;
        break;
    case UnitConvention::amu_mass_unit: {
        const double ell = amu_length_angstrom();
        preset.D_eV = params.D * kEvPerAmuC2;
        preset.r0_angstrom = params.r0 * ell;
        preset.a_width = params.a / ell;
        preset.m0_amu = params.m0;
        break;
    }
    }
    return preset;
}

const std::array<ReferenceRow, 4>& co_reference_rows() {
    static const std::array<ReferenceRow, 4> rows = {{
        {1, 1, -1, "1s1/2", 6.15913020},
        {2, 1, -2, "1p3/2", 6.52968379},
        {3, 1, -3, "1d5/2", 6.89146288},
        {4, 1, -4, "1f7/2", 7.24974882},
    }};
    return rows;
}

ScanReport convention_scan(const MoleculePreset& preset) {
    ScanReport report;
    const auto& rows = co_reference_rows();
    const UnitConvention conventions[] = {UnitConvention::raw_numbers,
                                          UnitConvention::hartree_atomic,
                                          UnitConvention::amu_mass_unit};
    for (UnitConvention conv : conventions) {
        const InternalParams ip = to_internal(preset, conv);
        bool all_rows_matched = true;
        double worst = 0.0;
        for (std::size_t row = 0; row < rows.size(); ++row) {
            bool row_matched = false;
            for (int n : {0, 1}) {
                ScanEntry entry;
                entry.convention = conv;
                entry.row = static_cast<int>(row);
                entry.n = n;
                try {
                    const Problem problem = Problem::make(
                        SymmetryMode::pdm(),
                        MorsePotential(ip.D, ip.r0, ip.a), ip.m0,
                        rows[row].kappa);
                    const RootResult roots = solve_energy(problem, n);
                    // Best root by |E| deviation from the tabulated value.
                    double best_dev = std::numeric_limits<double>::infinity();
                    for (const Root& root : roots.roots) {
                        const double dev =
                            std::fabs(std::fabs(root.energy) -
                                      rows[row].abs_energy) /
                            rows[row].abs_energy;
                        if (dev < best_dev) {
                            best_dev = dev;
                            entry.energy = root.energy;
                            entry.residual = root.residual;
                        }
                    }
                    entry.rel_deviation = best_dev;
                    entry.status = best_dev < 1e-3 ? ScanStatus::matched
                                                   : ScanStatus::mismatch;
                } catch (const solver_error& e) {
                    entry.status = e.code() == errc::empty_domain
                                       ? ScanStatus::empty_domain
                                       : ScanStatus::no_root;
                }
                if (entry.status == ScanStatus::matched)
                    row_matched = true;
                report.entries.push_back(entry);
            }
            if (!row_matched)
                all_rows_matched = false;
        }
        if (all_rows_matched) {
            // Worst deviation over the matched interpretation of each row.
            for (std::size_t row = 0; row < rows.size(); ++row) {
                double best_for_row = std::numeric_limits<double>::infinity();
                for (const ScanEntry& e : report.entries) {
                    if (e.convention == conv &&
                        e.row == static_cast<int>(row) &&
                        e.status == ScanStatus::matched)
                        best_for_row = std::min(best_for_row, e.rel_deviation);
                }
                worst = std::max(worst, best_for_row);
            }
            if (!report.any_matched || worst < report.best_max_deviation) {
                report.best = conv;
                report.best_max_deviation = worst;
            }
            report.any_matched = true;
        }
    }
    return report;
}

const char* convention_name(UnitConvention c) {
    switch (c) {
    case UnitConvention::raw_numbers:
        return "RawNumbers";
    case UnitConvention::hartree_atomic:
        return "HartreeAtomic";
    case UnitConvention::amu_mass_unit:
        return "AmuMassUnit";
    }
    return "?";
}

const char* scan_status_name(ScanStatus s) {
    switch (s) {
    case ScanStatus::matched:
        return "matched";
    case ScanStatus::mismatch:
        return "mismatch";
    case ScanStatus::empty_domain:
        return "empty-domain";
    case ScanStatus::no_root:
        return "no-root";
    }
    return "?";
}

} // namespace dmorse
