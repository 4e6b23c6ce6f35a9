#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "units_presets.hpp"

using namespace dmorse;

TEST_CASE("CO preset constants") {
    const MoleculePreset co = co_preset();
    CHECK(co.D_eV == 11.2256);
    CHECK(co.r0_angstrom == 1.1283);
    CHECK(co.m0_amu == 6.8606719);
    CHECK(co.a_width == 2.59441);
}

TEST_CASE("raw conversion is the identity") {
    const InternalParams p =
        to_internal(co_preset(), UnitConvention::raw_numbers);
    CHECK(p.D == 11.2256);
    CHECK(p.r0 == 1.1283);
    CHECK(p.a == 2.59441);
    CHECK(p.m0 == 6.8606719);
}

TEST_CASE("Hartree atomic conversion") {
    const InternalParams p =
        to_internal(co_preset(), UnitConvention::hartree_atomic);
    CHECK(p.D == doctest::Approx(11.2256 / 27.211386).epsilon(1e-12));
    CHECK(p.r0 == doctest::Approx(2.13218).epsilon(1e-5));
    CHECK(p.a == doctest::Approx(2.59441 * 0.529177211).epsilon(1e-12));
    CHECK(p.m0 ==
          doctest::Approx(6.8606719 * 1822.888486).epsilon(1e-12));
    // the definitional anchor: one Hartree of input is 1.0 internally
    MoleculePreset unit = co_preset();
    unit.D_eV = 27.211386;
    CHECK(to_internal(unit, UnitConvention::hartree_atomic).D ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("amu mass-unit conversion keeps beta invariant") {
    const MoleculePreset co = co_preset();
    const double beta_quoted = co.a_width * co.r0_angstrom;
    for (auto conv :
         {UnitConvention::raw_numbers, UnitConvention::hartree_atomic,
          UnitConvention::amu_mass_unit}) {
        const InternalParams p = to_internal(co, conv);
        CHECK(p.a * p.r0 == doctest::Approx(beta_quoted).epsilon(1e-12));
    }
    const InternalParams amu =
        to_internal(co, UnitConvention::amu_mass_unit);
    CHECK(amu.m0 == 6.8606719);
    CHECK(amu.D == doctest::Approx(11.2256 / 931.49410242e6).epsilon(1e-12));
}

TEST_CASE("round-trip through every convention") {
    const MoleculePreset co = co_preset();
    for (auto conv :
         {UnitConvention::raw_numbers, UnitConvention::hartree_atomic,
          UnitConvention::amu_mass_unit}) {
        const MoleculePreset back =
            to_preset_units(to_internal(co, conv), conv, co.name);
        CHECK(back.D_eV == doctest::Approx(co.D_eV).epsilon(1e-12));
        CHECK(back.r0_angstrom ==
              doctest::Approx(co.r0_angstrom).epsilon(1e-12));
        CHECK(back.m0_amu == doctest::Approx(co.m0_amu).epsilon(1e-12));
        CHECK(back.a_width == doctest::Approx(co.a_width).epsilon(1e-12));
    }
}

TEST_CASE("pinned factors sit within 1e-6 of the reference values") {
    // CODATA 2018: Hartree 27.211386245988 eV, Bohr 0.529177210903 A,
    // amu 1822.888486209 m_e and 931.49410242 MeV, hbar c 1973.269804 eV A.
    CHECK(std::fabs(kEvPerHartree - 27.211386245988) / 27.211386245988 <
          1e-6);
    CHECK(std::fabs(kAngstromPerBohr - 0.529177210903) / 0.529177210903 <
          1e-6);
    CHECK(std::fabs(kElectronMassPerAmu - 1822.888486209) / 1822.888486209 <
          1e-6);
    CHECK(std::fabs(kEvPerAmuC2 - 931.49410242e6) / 931.49410242e6 < 1e-6);
    CHECK(std::fabs(kHbarCEvAngstrom - 1973.269804) / 1973.269804 < 1e-6);
}

TEST_CASE("reference rows carry the tabulated spectrum") {
    const auto& rows = co_reference_rows();
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].abs_energy == 6.15913020);
    CHECK(rows[1].abs_energy == 6.52968379);
    CHECK(rows[2].abs_energy == 6.89146288);
    CHECK(rows[3].abs_energy == 7.24974882);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].ell_tilde == static_cast<int>(i) + 1);
        CHECK(rows[i].kappa == -(static_cast<int>(i) + 1));
        CHECK(rows[i].n == 1);
    }
}

TEST_CASE("convention scan: structure, determinism, outcome classes") {
    const ScanReport report = convention_scan(co_preset());
    CHECK(report.entries.size() == 24); // 3 conventions x 4 rows x 2 n
    for (const ScanEntry& e : report.entries) {
        if (e.status == ScanStatus::matched)
            CHECK(e.rel_deviation < 1e-3);
        if (e.status == ScanStatus::matched ||
            e.status == ScanStatus::mismatch)
            CHECK(std::fabs(e.residual) <= 1e-12);
    }

    const ScanReport again = convention_scan(co_preset());
    REQUIRE(again.entries.size() == report.entries.size());
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        CHECK(again.entries[i].status == report.entries[i].status);
        CHECK(again.entries[i].energy == report.entries[i].energy);
        CHECK(again.entries[i].rel_deviation ==
              report.entries[i].rel_deviation);
    }
}

TEST_CASE("scan classifies an impossible preset as empty everywhere") {
    // A preset whose negative branch has no admissible energies at all in
    // the raw reading: the entries must report the failure class, not throw.
    MoleculePreset p = co_preset();
    const ScanReport report = convention_scan(p);
    int empties = 0;
    for (const ScanEntry& e : report.entries)
        if (e.status == ScanStatus::empty_domain ||
            e.status == ScanStatus::no_root)
            ++empties;
    CHECK(empties > 0); // the quoted constants do not reproduce the table
}

TEST_CASE("names for report rendering") {
    CHECK(std::string(convention_name(UnitConvention::raw_numbers)) ==
          "RawNumbers");
    CHECK(std::string(convention_name(UnitConvention::hartree_atomic)) ==
          "HartreeAtomic");
    CHECK(std::string(convention_name(UnitConvention::amu_mass_unit)) ==
          "AmuMassUnit");
    CHECK(std::string(scan_status_name(ScanStatus::empty_domain)) ==
          "empty-domain");
}
