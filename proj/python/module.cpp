#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "verlinde/core.hpp"
#include "verlinde/oracle.hpp"
#include "verlinde/surfaces.hpp"
#include "verlinde/surgery.hpp"

namespace py = pybind11;
using namespace verlinde;

namespace {

py::int_ to_pyint(const mpz_class& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

SpinStructure make_sigma(int modulus, const std::vector<std::pair<int, int>>& pairs) {
    SpinStructure s;
    s.modulus = modulus;
    s.pairs = pairs;
    return s;
}

ComputeOptions make_opts(long prec, long max_prec, int jobs) {
    ComputeOptions o;
    o.policy.initial_bits = prec;
    o.policy.max_bits = max_prec;
    o.jobs = jobs;
    o.policy.validate();
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Verlinde numbers and their spin/cohomological refinements";

    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted");
    py::register_exception<NonIntegral>(m, "NonIntegral");

    m.def(
        "alcove",
        [](int N, int K) { return enumerate_alcove(AlcoveContext(N, K)); },
        py::arg("N"), py::arg("K"),
        "All highest weights of SU(N) at level K, lexicographically descending");

    m.def(
        "alcove_size",
        [](int N, int K) { return to_pyint(alcove_cardinality(AlcoveContext(N, K))); },
        py::arg("N"), py::arg("K"));

    m.def(
        "verlinde",
        [](int N, int K, int g, long prec, long max_prec, int jobs) {
            return to_pyint(verlinde_number(AlcoveContext(N, K), g, make_opts(prec, max_prec, jobs)));
        },
        py::arg("N"), py::arg("K"), py::arg("g"), py::arg("prec") = 128,
        py::arg("max_prec") = 8192, py::arg("jobs") = 1, "The genus-g Verlinde number d_{N,K}(g)");

    m.def(
        "pu_verlinde",
        [](int N, int K, int g, long prec, long max_prec, int jobs) {
            return to_pyint(
                pu_verlinde_number(AlcoveContext(N, K), g, make_opts(prec, max_prec, jobs)));
        },
        py::arg("N"), py::arg("K"), py::arg("g"), py::arg("prec") = 128,
        py::arg("max_prec") = 8192, py::arg("jobs") = 1,
        "The projective Verlinde number d_{N,K}(g) / N'^g");

    m.def(
        "spin_verlinde",
        [](int N, int K, const std::vector<std::pair<int, int>>& sigma, long prec, long max_prec,
           int jobs) {
            return to_pyint(spin_verlinde_number(AlcoveContext(N, K), make_sigma(N, sigma),
                                                 make_opts(prec, max_prec, jobs)));
        },
        py::arg("N"), py::arg("K"), py::arg("sigma"), py::arg("prec") = 128,
        py::arg("max_prec") = 8192, py::arg("jobs") = 1,
        "Spin-refined d_{N,K}(g, sigma); sigma is a list of (a, b) pairs mod N");

    m.def(
        "coho_verlinde",
        [](int N, int K, int j, const std::vector<std::pair<int, int>>& sigma, long prec,
           long max_prec, int jobs) {
            return to_pyint(coho_verlinde_number(AlcoveContext(N, K), j, make_sigma(N / j, sigma),
                                                 make_opts(prec, max_prec, jobs)));
        },
        py::arg("N"), py::arg("K"), py::arg("j"), py::arg("sigma"), py::arg("prec") = 128,
        py::arg("max_prec") = 8192, py::arg("jobs") = 1,
        "Cohomologically refined value; sigma entries are taken mod N/j");

    m.def(
        "pu_spin_verlinde",
        [](int N, int K, const std::vector<std::pair<int, int>>& sigma, long prec, long max_prec,
           int jobs) {
            AlcoveContext ctx(N, K);
            return to_pyint(pu_spin_verlinde_number(ctx, make_sigma(ctx.d, sigma),
                                                    make_opts(prec, max_prec, jobs)));
        },
        py::arg("N"), py::arg("K"), py::arg("sigma"), py::arg("prec") = 128,
        py::arg("max_prec") = 8192, py::arg("jobs") = 1,
        "Spin-refined projective value; sigma entries are taken mod gcd(N, K)");

    m.def(
        "spin_admissible",
        [](int N, int K) {
            auto w = spin_admissible_su(N, K);
            return py::make_tuple(w.admissible, w.j, w.modulus);
        },
        py::arg("N"), py::arg("K"), "Returns (admissible, witness j, modulus N/j)");

    m.def("coho_admissible", &coho_admissible_su, py::arg("N"), py::arg("K"));

    m.def(
        "pu_spin_admissible",
        [](int N, int K) { return pu_spin_admissible(AlcoveContext(N, K)); },
        py::arg("N"), py::arg("K"));

    m.def(
        "level_rank_ok",
        [](int N, int K, int gmax) { return level_rank_check(N, K, gmax).ok; },
        py::arg("N"), py::arg("K"), py::arg("gmax") = 2);

    m.def(
        "fusion",
        [](int N, int K, int l1, int l2, int l3) {
            AlcoveContext ctx(N, K);
            auto t = fusion_coeffs(ctx, ComputeOptions{});
            return t.at(l1, l2, l3);
        },
        py::arg("N"), py::arg("K"), py::arg("i"), py::arg("j"), py::arg("k"),
        "Fusion coefficient by alcove indices (enumeration order)");

    m.def(
        "handle_trace",
        [](int N, int K, int g) {
            return to_pyint(handle_trace_dimension(AlcoveContext(N, K), g, ComputeOptions{}));
        },
        py::arg("N"), py::arg("K"), py::arg("g"),
        "Genus-g dimension via the integer fusion-ring oracle");

    m.def(
        "arf",
        [](const std::vector<std::pair<int, int>>& sigma) {
            QuadraticForm q{2, sigma};
            q.validate();
            return arf(q);
        },
        py::arg("sigma"), "Arf invariant of a mod-2 quadratic form");

    m.def(
        "surgery_count",
        [](const std::vector<std::vector<long>>& matrix, long d) {
            IntMatrix m;
            for (const auto& row : matrix) {
                std::vector<mpz_class> r(row.begin(), row.end());
                m.push_back(std::move(r));
            }
            return to_pyint(count_structures(LinkingMatrix(std::move(m)), d));
        },
        py::arg("matrix"), py::arg("d"),
        "Number of modulo-d spin structures of the surgered 3-manifold");

    m.def(
        "surgery_solve",
        [](const std::vector<std::vector<long>>& matrix, long d) {
            IntMatrix m;
            for (const auto& row : matrix) {
                std::vector<mpz_class> r(row.begin(), row.end());
                m.push_back(std::move(r));
            }
            auto sol = solve_characteristic(LinkingMatrix(std::move(m)), d);
            return py::make_tuple(sol.solvable, to_pyint(sol.count), sol.particular,
                                  sol.kernel_basis);
        },
        py::arg("matrix"), py::arg("d"),
        "Returns (solvable, count, particular solution, kernel basis)");
}
