#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pkpow/arith.hpp"
#include "pkpow/characters.hpp"
#include "pkpow/circle.hpp"
#include "pkpow/representations.hpp"
#include "pkpow/singular.hpp"
#include "pkpow/verify.hpp"

namespace py = pybind11;
using namespace pkpow;

PYBIND11_MODULE(_core, m) {
    m.doc() = "prime + k-th power representation toolkit";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    // --- arith -------------------------------------------------------------
    py::class_<PrimeTable>(m, "PrimeTable")
        .def_property_readonly("limit", &PrimeTable::limit)
        .def_property_readonly("primes", &PrimeTable::primes)
        .def("count", &PrimeTable::count)
        .def("is_prime", &PrimeTable::is_prime)
        .def("__len__", &PrimeTable::count)
        .def("__contains__", &PrimeTable::is_prime);

    m.def("sieve_primes",
          [](uint64_t limit, unsigned threads) {
              return sieve_primes(limit, Parallel(threads));
          },
          py::arg("limit"), py::arg("threads") = 1);

    py::class_<Factorization>(m, "Factorization")
        .def_readonly("n", &Factorization::n)
        .def_readonly("factors", &Factorization::factors);
    m.def("factorize", &factorize, py::arg("n"));

    py::class_<MultInvariants>(m, "MultInvariants")
        .def_readonly("mu", &MultInvariants::mu)
        .def_readonly("phi", &MultInvariants::phi)
        .def_readonly("omega", &MultInvariants::omega);
    m.def("mult_invariants", &mult_invariants, py::arg("n"));

    py::class_<RootCount>(m, "RootCount")
        .def_readonly("k", &RootCount::k)
        .def_readonly("d", &RootCount::d)
        .def_readonly("n", &RootCount::n)
        .def_readonly("count", &RootCount::count);
    m.def("root_count", &root_count, py::arg("k"), py::arg("d"), py::arg("n"));
    m.def("root_count_exhaustive", &root_count_exhaustive, py::arg("k"),
          py::arg("d"), py::arg("n"));
    m.def("rho_prime", &rho_prime, py::arg("k"), py::arg("p"), py::arg("n"));
    m.def("is_in_Ik", &is_in_Ik, py::arg("k"), py::arg("n"));
    m.def("is_perfect_power", &is_perfect_power, py::arg("n"), py::arg("p"));

    py::class_<PowerOmegaSum>(m, "PowerOmegaSum")
        .def_readonly("x", &PowerOmegaSum::x)
        .def_readonly("a", &PowerOmegaSum::a)
        .def_readonly("sum", &PowerOmegaSum::sum)
        .def_readonly("normalized", &PowerOmegaSum::normalized);
    m.def("sum_power_omega", &sum_power_omega, py::arg("x"), py::arg("a"));

    // --- characters ----------------------------------------------------------
    py::class_<DirichletCharacter>(m, "DirichletCharacter")
        .def_property_readonly("modulus", &DirichletCharacter::modulus)
        .def_property_readonly("conductor", &DirichletCharacter::conductor)
        .def_property_readonly("is_primitive", &DirichletCharacter::is_primitive)
        .def_property_readonly("is_principal", &DirichletCharacter::is_principal)
        .def_property_readonly("order", &DirichletCharacter::order)
        .def_property_readonly("exponents", &DirichletCharacter::exponents)
        .def("conjugate", &DirichletCharacter::conjugate)
        .def("__call__", &DirichletCharacter::eval, py::arg("a"))
        .def("__eq__", &DirichletCharacter::operator==);

    py::class_<CharacterGroup>(m, "CharacterGroup")
        .def(py::init<uint64_t>(), py::arg("q"))
        .def_property_readonly("modulus", &CharacterGroup::modulus)
        .def_property_readonly("phi", &CharacterGroup::phi)
        .def("__len__", &CharacterGroup::size)
        .def("character", &CharacterGroup::character, py::arg("index"))
        .def("principal", &CharacterGroup::principal);

    m.def("character_group", &character_group, py::arg("q"));
    m.def("conductor_and_primitive_part", &conductor_and_primitive_part,
          py::arg("chi"));
    m.def("induced_character", &induced_character, py::arg("chi"),
          py::arg("target"));
    m.def("product_character", &product_character, py::arg("chi1"),
          py::arg("chi2"), py::arg("target"));

    m.def("gauss_sum", &gauss_sum, py::arg("chi"));
    m.def("v_sum", &v_sum, py::arg("k"), py::arg("a"), py::arg("q"));
    m.def("h_sum",
          py::overload_cast<unsigned, const DirichletCharacter&, uint64_t,
                            int64_t>(&h_sum),
          py::arg("k"), py::arg("chi"), py::arg("q"), py::arg("n"));
    m.def("h_sum_principal",
          py::overload_cast<unsigned, uint64_t, int64_t>(&h_sum), py::arg("k"),
          py::arg("q"), py::arg("n"));
    m.def("sigma_sum", &sigma_sum, py::arg("k"), py::arg("chi"), py::arg("r"),
          py::arg("n"));

    py::class_<TFactor>(m, "TFactor")
        .def_readonly("via_h", &TFactor::via_h)
        .def_readonly("via_sigma", &TFactor::via_sigma);
    m.def("t_factor", &t_factor, py::arg("k"), py::arg("chi"), py::arg("n"));

    // --- singular series -------------------------------------------------------
    py::class_<TruncatedEulerProduct>(m, "TruncatedEulerProduct")
        .def_readonly("k", &TruncatedEulerProduct::k)
        .def_readonly("n", &TruncatedEulerProduct::n)
        .def_readonly("cutoff", &TruncatedEulerProduct::cutoff)
        .def_readonly("excluded_modulus", &TruncatedEulerProduct::excluded_modulus)
        .def_readonly("value", &TruncatedEulerProduct::value)
        .def_readonly("tail_estimate", &TruncatedEulerProduct::tail_estimate)
        .def_readonly("lambda_", &TruncatedEulerProduct::lambda)
        .def_readonly("degenerate_skip", &TruncatedEulerProduct::degenerate_skip);

    m.def("local_factor", &local_factor, py::arg("k"), py::arg("p"), py::arg("n"));
    m.def("singular_series", &singular_series, py::arg("k"), py::arg("n"),
          py::arg("cutoff"), py::arg("primes"));
    m.def("a_coeff", &a_coeff, py::arg("k"), py::arg("n"), py::arg("q"),
          py::arg("r"));
    m.def("truncated_sum", &truncated_sum, py::arg("k"), py::arg("n"),
          py::arg("R"), py::arg("r"));

    py::class_<ProductForm>(m, "ProductForm")
        .def_readonly("value", &ProductForm::value)
        .def_readonly("degenerate_skip", &ProductForm::degenerate_skip);
    m.def("product_form", &product_form, py::arg("k"), py::arg("n"),
          py::arg("R"), py::arg("r"), py::arg("primes"));
    m.def("tail_bound", &tail_bound, py::arg("k"), py::arg("n"), py::arg("R"),
          py::arg("V"), py::arg("primes"));

    // --- representations ---------------------------------------------------------
    py::class_<RepScanResult>(m, "RepScanResult")
        .def_readonly("k", &RepScanResult::k)
        .def_readonly("x_max", &RepScanResult::x_max)
        .def_readonly("counts", &RepScanResult::counts)
        .def_readonly("exceptional", &RepScanResult::exceptional)
        .def("count", &RepScanResult::count, py::arg("n"))
        .def("in_Ik", &RepScanResult::in_Ik, py::arg("n"));

    m.def("count_reps", &count_reps, py::arg("k"), py::arg("n"),
          py::arg("primes"));
    m.def("scan",
          [](unsigned k, uint64_t x_max, unsigned threads) {
              return scan(k, x_max, Parallel(threads));
          },
          py::arg("k"), py::arg("x_max"), py::arg("threads") = 1);
    m.def("exceptional_set",
          [](unsigned k, uint64_t x_max, unsigned threads) {
              return exceptional_set(k, x_max, Parallel(threads));
          },
          py::arg("k"), py::arg("x_max"), py::arg("threads") = 1);

    py::class_<WindowedCount>(m, "WindowedCount")
        .def_readonly("k", &WindowedCount::k)
        .def_readonly("X", &WindowedCount::X)
        .def_readonly("n", &WindowedCount::n)
        .def_readonly("weighted", &WindowedCount::weighted)
        .def_readonly("unweighted", &WindowedCount::unweighted);
    m.def("windowed_count", &windowed_count, py::arg("k"), py::arg("X"),
          py::arg("n"), py::arg("primes"));
    m.def("l_count", &l_count, py::arg("k"), py::arg("X"), py::arg("n"),
          py::arg("rho"));
    m.def("selberg_bound", &selberg_bound, py::arg("k"), py::arg("n"),
          py::arg("X"), py::arg("cutoff"), py::arg("primes"));
    m.def("hl_ratio", &hl_ratio, py::arg("k"), py::arg("n"),
          py::arg("series_cutoff"), py::arg("primes"));
    m.def("count_waring", &count_waring, py::arg("s"), py::arg("k"),
          py::arg("n"));
    m.def("write_scan_cache", &write_scan_cache, py::arg("result"),
          py::arg("path"));
    m.def("read_scan_cache", &read_scan_cache, py::arg("path"));

    // --- circle method ---------------------------------------------------------
    py::class_<Arc>(m, "Arc")
        .def_readonly("a", &Arc::a)
        .def_readonly("q", &Arc::q)
        .def_readonly("center", &Arc::center)
        .def_readonly("half_width", &Arc::half_width);

    py::class_<ArcDissection>(m, "ArcDissection")
        .def_readonly("X", &ArcDissection::X)
        .def_readonly("P", &ArcDissection::P)
        .def_readonly("Q", &ArcDissection::Q)
        .def_readonly("arcs", &ArcDissection::arcs)
        .def_readonly("minor", &ArcDissection::minor)
        .def("major_measure", &ArcDissection::major_measure);

    m.def("default_q", &default_q, py::arg("X"), py::arg("k"), py::arg("P"));
    m.def("dissect", &dissect, py::arg("X"), py::arg("P"), py::arg("Q"));

    py::class_<CoefficientVector>(m, "CoefficientVector")
        .def_readonly("k", &CoefficientVector::k)
        .def_readonly("X", &CoefficientVector::X)
        .def_readonly("n_min", &CoefficientVector::n_min)
        .def_readonly("n_max", &CoefficientVector::n_max)
        .def_readonly("c", &CoefficientVector::c)
        .def("at", &CoefficientVector::at, py::arg("n"));

    m.def("f_sum", &f_sum, py::arg("k"), py::arg("X"), py::arg("alpha"));
    m.def("s_sum", &s_sum, py::arg("X"), py::arg("alpha"), py::arg("primes"));
    m.def("t_rho", &t_rho, py::arg("X"), py::arg("rho"), py::arg("eta"));
    m.def("coefficients",
          [](unsigned k, uint64_t X, const PrimeTable& primes, unsigned threads) {
              return coefficients(k, X, primes, Parallel(threads));
          },
          py::arg("k"), py::arg("X"), py::arg("primes"), py::arg("threads") = 1);
    m.def("unit_coefficients", &unit_coefficients, py::arg("k"), py::arg("X"));
    m.def("integrate_major", &integrate_major, py::arg("coefficients"),
          py::arg("n"), py::arg("dissection"));

    py::class_<RSplit>(m, "RSplit")
        .def_readonly("r", &RSplit::r)
        .def_readonly("r1", &RSplit::r1)
        .def_readonly("r2", &RSplit::r2);
    m.def("r_split", &r_split, py::arg("coefficients"), py::arg("n"),
          py::arg("dissection"));

    py::class_<HuaMoment>(m, "HuaMoment")
        .def_readonly("k", &HuaMoment::k)
        .def_readonly("X", &HuaMoment::X)
        .def_readonly("s", &HuaMoment::s)
        .def_readonly("exact_count", &HuaMoment::exact_count)
        .def_readonly("exact", &HuaMoment::exact)
        .def_readonly("grid", &HuaMoment::grid)
        .def_readonly("normalized", &HuaMoment::normalized);
    m.def("hua_moment", &hua_moment, py::arg("k"), py::arg("X"), py::arg("s"));

    py::class_<MinorL2>(m, "MinorL2")
        .def_readonly("lhs", &MinorL2::lhs)
        .def_readonly("bessel", &MinorL2::bessel)
        .def_readonly("parseval", &MinorL2::parseval)
        .def_readonly("major_l2", &MinorL2::major_l2);
    m.def("minor_l2", &minor_l2, py::arg("coefficients"), py::arg("dissection"));

    py::class_<MainTermComparison>(m, "MainTermComparison")
        .def_readonly("r1", &MainTermComparison::r1)
        .def_readonly("prediction", &MainTermComparison::prediction)
        .def_readonly("ratio", &MainTermComparison::ratio)
        .def_readonly("ratio_defined", &MainTermComparison::ratio_defined)
        .def_readonly("series", &MainTermComparison::series)
        .def_readonly("l1", &MainTermComparison::l1)
        .def_readonly("weight_bridge", &MainTermComparison::weight_bridge);
    m.def("main_term_compare", &main_term_compare, py::arg("coefficients"),
          py::arg("n"), py::arg("P"), py::arg("dissection"), py::arg("primes"));

    // --- verify suites -----------------------------------------------------------
    py::class_<VerifyFailure>(m, "VerifyFailure")
        .def_readonly("case_id", &VerifyFailure::case_id)
        .def_readonly("lhs", &VerifyFailure::lhs)
        .def_readonly("rhs", &VerifyFailure::rhs)
        .def_readonly("deviation", &VerifyFailure::deviation);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("suite", &VerifyReport::suite)
        .def_readonly("cases", &VerifyReport::cases)
        .def_readonly("failures", &VerifyReport::failures)
        .def_readonly("max_deviation", &VerifyReport::max_deviation)
        .def_readonly("notes", &VerifyReport::notes)
        .def("ok", &VerifyReport::ok);
    m.def("run_verify", &run_verify, py::arg("suite"), py::arg("seed") = 1);
}
