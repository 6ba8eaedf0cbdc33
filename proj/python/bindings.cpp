// bindings.cpp - pybind11 surface over the hardysn core
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardysn/approx_scale.hpp"
#include "hardysn/grid.hpp"
#include "hardysn/operator.hpp"
#include "hardysn/oracle.hpp"
#include "hardysn/partition.hpp"
#include "hardysn/space.hpp"

namespace py = pybind11;
using namespace hardysn;

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-sided s-number estimates for weighted Hardy operators";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &Interval::a)
        .def_readonly("b", &Interval::b)
        .def("length", &Interval::length)
        .def("midpoint", &Interval::midpoint)
        .def("__repr__", [](const Interval& i) {
            return "Interval(" + std::to_string(i.a) + ", " +
                   std::to_string(i.b) + ")";
        });

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init([](const Interval& iv, std::vector<double> s) {
                 return GridFunction(iv, std::move(s));
             }),
             py::arg("interval"), py::arg("samples"))
        .def_static("constant", &GridFunction::constant, py::arg("interval"),
                    py::arg("m"), py::arg("value"))
        .def_static("from_callable", &GridFunction::from_callable,
                    py::arg("interval"), py::arg("m"), py::arg("f"))
        .def_static("builtin", &make_builtin, py::arg("spec"),
                    py::arg("interval"), py::arg("m"))
        .def_property_readonly(
            "interval", [](const GridFunction& g) { return g.interval(); })
        .def_property_readonly("values",
                               [](const GridFunction& g) {
                                   return std::vector<double>(
                                       g.samples().begin(), g.samples().end());
                               })
        .def("__len__", &GridFunction::size)
        .def("value_at", &GridFunction::value_at)
        .def("max_abs", &GridFunction::max_abs);

    m.def("integrate",
          py::overload_cast<const GridFunction&, const Interval&>(&integrate),
          py::arg("f"), py::arg("j"));
    m.def("integrate", py::overload_cast<const GridFunction&>(&integrate),
          py::arg("f"));
    m.def("product", &product, py::arg("f"), py::arg("g"));
    m.def("combine", &combine, py::arg("f"), py::arg("g"), py::arg("cf"),
          py::arg("cg"));
    m.def("read_csv", &read_csv, py::arg("path"), py::arg("interval"),
          py::arg("m"));
    m.def("write_csv", &write_csv, py::arg("f"), py::arg("path"));

    py::class_<SpaceSpec>(m, "SpaceSpec")
        .def_static("constant", &SpaceSpec::constant, py::arg("p"))
        .def_static("variable", &SpaceSpec::variable, py::arg("p"))
        .def("is_constant", &SpaceSpec::is_constant)
        .def("exponent", &SpaceSpec::exponent)
        .def("exponents", &SpaceSpec::exponents)
        .def("p_min", &SpaceSpec::p_min)
        .def("p_max", &SpaceSpec::p_max)
        .def("conjugate", &SpaceSpec::conjugate)
        .def("associate_caveat", &SpaceSpec::associate_caveat);

    m.def("luxemburg_norm",
          py::overload_cast<const GridFunction&, const SpaceSpec&,
                            const Interval&>(&luxemburg_norm),
          py::arg("f"), py::arg("space"), py::arg("j"));
    m.def("luxemburg_norm",
          py::overload_cast<const GridFunction&, const SpaceSpec&>(
              &luxemburg_norm),
          py::arg("f"), py::arg("space"));
    m.def("associate_norm",
          py::overload_cast<const GridFunction&, const SpaceSpec&,
                            const Interval&>(&associate_norm),
          py::arg("g"), py::arg("space"), py::arg("j"));
    m.def("associate_norm",
          py::overload_cast<const GridFunction&, const SpaceSpec&>(
              &associate_norm),
          py::arg("g"), py::arg("space"));
    m.def("holder_defect", &holder_defect, py::arg("f"), py::arg("g"),
          py::arg("space"), py::arg("j"));
    m.def("muckenhoupt_constant", &muckenhoupt_constant, py::arg("space"),
          py::arg("i"), py::arg("depth"));

    py::class_<LogHolderReport>(m, "LogHolderReport")
        .def_readonly("constant", &LogHolderReport::constant)
        .def_readonly("pass_", &LogHolderReport::pass);
    m.def("log_holder_check", &log_holder_check, py::arg("p"));

    py::class_<WeightPair>(m, "WeightPair")
        .def(py::init<GridFunction, GridFunction, double>(), py::arg("u"),
             py::arg("v"), py::arg("floor") = 1e-12)
        .def_readonly("u", &WeightPair::u)
        .def_readonly("v", &WeightPair::v);

    py::class_<OperatorSpec>(m, "OperatorSpec")
        .def(py::init<Interval, double, WeightPair, SpaceSpec>(),
             py::arg("domain"), py::arg("base"), py::arg("weights"),
             py::arg("space"))
        .def_readonly("domain", &OperatorSpec::domain)
        .def_readonly("base", &OperatorSpec::base)
        .def_readonly("weights", &OperatorSpec::weights)
        .def_readonly("space", &OperatorSpec::space)
        .def("restricted", &OperatorSpec::restricted, py::arg("j"),
             py::arg("base"));

    m.def("apply", &apply, py::arg("op"), py::arg("f"));
    m.def("apply_adjoint", &apply_adjoint, py::arg("op"), py::arg("g"));
    m.def("a_profile", &a_profile, py::arg("op"), py::arg("t"));

    py::class_<SupResult>(m, "SupResult")
        .def_readonly("value", &SupResult::value)
        .def_readonly("argmax", &SupResult::argmax);
    m.def("a_sup", &a_sup, py::arg("op"));

    py::class_<AscentOptions>(m, "AscentOptions")
        .def(py::init<>())
        .def_readwrite("rounds", &AscentOptions::rounds)
        .def_readwrite("rel_stop", &AscentOptions::rel_stop)
        .def_readwrite("indicator_levels", &AscentOptions::indicator_levels)
        .def_readwrite("restarts", &AscentOptions::restarts)
        .def_readwrite("seed", &AscentOptions::seed);
    m.def("operator_norm_lower", &operator_norm_lower, py::arg("op"),
          py::arg("options") = AscentOptions{});

    py::class_<NormBracket>(m, "NormBracket")
        .def_readonly("lower", &NormBracket::lower)
        .def_readonly("upper", &NormBracket::upper)
        .def_readonly("method", &NormBracket::method);
    m.def("norm_bracket", &norm_bracket, py::arg("op"),
          py::arg("k_variable") = 4.0, py::arg("options") = AscentOptions{});

    py::class_<CompactnessProfile>(m, "CompactnessProfile")
        .def_readonly("x_left", &CompactnessProfile::x_left)
        .def_readonly("left", &CompactnessProfile::left)
        .def_readonly("x_right", &CompactnessProfile::x_right)
        .def_readonly("right", &CompactnessProfile::right);
    m.def("compactness_profile", &compactness_profile, py::arg("op"),
          py::arg("n_points"));

    py::enum_<Side>(m, "Side")
        .value("Left", Side::Left)
        .value("Right", Side::Right)
        .value("Full", Side::Full);
    m.def("restricted_norm", &restricted_norm, py::arg("x"), py::arg("side"),
          py::arg("j"), py::arg("weights"), py::arg("space"),
          py::arg("options") = AscentOptions{14, 1e-11, 2, 0});

    py::class_<EqualizeOptions>(m, "EqualizeOptions")
        .def(py::init<>())
        .def_readwrite("tol", &EqualizeOptions::tol)
        .def_readwrite("max_iter", &EqualizeOptions::max_iter)
        .def_readwrite("pos_tol", &EqualizeOptions::pos_tol)
        .def_readwrite("ascent", &EqualizeOptions::ascent);
    py::class_<BalanceResult>(m, "BalanceResult")
        .def_readonly("point", &BalanceResult::point)
        .def_readonly("left_norm", &BalanceResult::left_norm)
        .def_readonly("right_norm", &BalanceResult::right_norm)
        .def_readonly("residual", &BalanceResult::residual)
        .def_readonly("iterations", &BalanceResult::iterations);
    m.def("equalize", &equalize, py::arg("j"), py::arg("weights"),
          py::arg("space"), py::arg("options") = EqualizeOptions{});
    m.def("equalized_norm", &equalized_norm, py::arg("j"), py::arg("weights"),
          py::arg("space"), py::arg("options") = EqualizeOptions{});

    py::class_<DeviationOptions>(m, "DeviationOptions")
        .def(py::init<>())
        .def_readwrite("budget", &DeviationOptions::budget)
        .def_readwrite("seed", &DeviationOptions::seed)
        .def_readwrite("restarts", &DeviationOptions::restarts)
        .def_readwrite("ascent", &DeviationOptions::ascent);
    m.def("deviation_lower", &deviation_lower, py::arg("j"), py::arg("weights"),
          py::arg("space"), py::arg("options") = DeviationOptions{});
    py::class_<DeviationBracket>(m, "DeviationBracket")
        .def_readonly("lower", &DeviationBracket::lower)
        .def_readonly("upper", &DeviationBracket::upper)
        .def_readonly("balance_point", &DeviationBracket::balance_point)
        .def_readonly("alpha_bound", &DeviationBracket::alpha_bound);
    m.def("deviation_bracket", &deviation_bracket, py::arg("j"),
          py::arg("weights"), py::arg("space"),
          py::arg("options") = DeviationOptions{});

    py::class_<PerturbationCheck>(m, "PerturbationCheck")
        .def_readonly("lhs", &PerturbationCheck::lhs)
        .def_readonly("rhs", &PerturbationCheck::rhs)
        .def_readonly("slack_factor", &PerturbationCheck::slack_factor);
    m.def("perturb_u_bound", &perturb_u_bound, py::arg("j"), py::arg("u1"),
          py::arg("u2"), py::arg("v"), py::arg("space"),
          py::arg("options") = DeviationOptions{});
    m.def("perturb_v_bound", &perturb_v_bound, py::arg("j"), py::arg("u"),
          py::arg("v1"), py::arg("v2"), py::arg("space"),
          py::arg("options") = DeviationOptions{});

    py::enum_<StepNormMode>(m, "StepNormMode")
        .value("Space", StepNormMode::Space)
        .value("Associate", StepNormMode::Associate);
    py::class_<StepApproxResult>(m, "StepApproxResult")
        .def_readonly("fn", &StepApproxResult::fn)
        .def_readonly("breakpoints", &StepApproxResult::breakpoints)
        .def_readonly("error", &StepApproxResult::error)
        .def_readonly("pieces", &StepApproxResult::pieces);
    m.def("step_approximate", &step_approximate, py::arg("w"), py::arg("eta"),
          py::arg("mode"), py::arg("space"));

    py::class_<PartitionOptions>(m, "PartitionOptions")
        .def(py::init<>())
        .def_readwrite("march_tol", &PartitionOptions::march_tol)
        .def_readwrite("max_march_iter", &PartitionOptions::max_march_iter)
        .def_readwrite("eps_rel_tol", &PartitionOptions::eps_rel_tol)
        .def_readwrite("max_intervals", &PartitionOptions::max_intervals)
        .def_readwrite("equalize", &PartitionOptions::equalize)
        .def_readwrite("full_norm", &PartitionOptions::full_norm);
    py::enum_<PieceKind>(m, "PieceKind")
        .value("FirstNorm", PieceKind::FirstNorm)
        .value("Balanced", PieceKind::Balanced);
    py::class_<PieceInfo>(m, "PieceInfo")
        .def_readonly("j", &PieceInfo::j)
        .def_readonly("kind", &PieceInfo::kind)
        .def_readonly("value", &PieceInfo::value);
    py::class_<Partition>(m, "Partition")
        .def_readonly("epsilon", &Partition::epsilon)
        .def_readonly("points", &Partition::points)
        .def_readonly("pieces", &Partition::pieces)
        .def("count", &Partition::count);
    m.def("build_partition", &build_partition, py::arg("eps"), py::arg("i"),
          py::arg("weights"), py::arg("space"),
          py::arg("options") = PartitionOptions{});

    py::class_<EpsilonSolve>(m, "EpsilonSolve")
        .def_readonly("epsilon", &EpsilonSolve::epsilon)
        .def_readonly("partition", &EpsilonSolve::partition)
        .def_readonly("marches", &EpsilonSolve::marches);
    m.def("solve_epsilon", &solve_epsilon, py::arg("n"), py::arg("i"),
          py::arg("weights"), py::arg("space"),
          py::arg("options") = PartitionOptions{});

    py::class_<SNumberEstimate>(m, "SNumberEstimate")
        .def_readonly("n", &SNumberEstimate::n)
        .def_readonly("epsilon", &SNumberEstimate::epsilon)
        .def_readonly("lower", &SNumberEstimate::lower)
        .def_readonly("upper", &SNumberEstimate::upper)
        .def_readonly("notes", &SNumberEstimate::notes);
    m.def("snum_estimate", &snum_estimate, py::arg("n"), py::arg("i"),
          py::arg("weights"), py::arg("space"), py::arg("c_low") = 1.0,
          py::arg("c_up") = 1.0, py::arg("options") = PartitionOptions{});

    m.def("gamma_factor", &gamma_factor, py::arg("p"));
    m.def("variable_reference", &variable_reference, py::arg("space"),
          py::arg("i"));

    py::class_<AsymptoteRow>(m, "AsymptoteRow")
        .def_readonly("n", &AsymptoteRow::n)
        .def_readonly("epsilon", &AsymptoteRow::epsilon)
        .def_readonly("n_eps", &AsymptoteRow::n_eps)
        .def_readonly("ratio", &AsymptoteRow::ratio);
    py::class_<AsymptoteReport>(m, "AsymptoteReport")
        .def_readonly("rows", &AsymptoteReport::rows)
        .def_readonly("integral_uv", &AsymptoteReport::integral_uv)
        .def_readonly("reference", &AsymptoteReport::reference)
        .def_readonly("reference_kind", &AsymptoteReport::reference_kind)
        .def_readonly("reference_only", &AsymptoteReport::reference_only);
    m.def("asymptote", &asymptote, py::arg("ns"), py::arg("i"),
          py::arg("weights"), py::arg("space"),
          py::arg("options") = PartitionOptions{});

    py::class_<KernelMatrix>(m, "KernelMatrix")
        .def_readonly("size", &KernelMatrix::size)
        .def_readonly("interval", &KernelMatrix::interval)
        .def_readonly("base", &KernelMatrix::base)
        .def_readonly("h", &KernelMatrix::h)
        .def_readonly("data", &KernelMatrix::data)
        .def("at", &KernelMatrix::at);
    m.def("discretize", &discretize, py::arg("op"), py::arg("m"));
    m.def("svd_snumbers", &svd_snumbers, py::arg("kernel"), py::arg("k"));
    m.def("projected_deviation_l2", &projected_deviation_l2, py::arg("j"),
          py::arg("weights"), py::arg("m"));
}
