#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperwalk/cli.hpp"
#include "hyperwalk/error.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/lp_solver.hpp"
#include "hyperwalk/schedule_enum.hpp"

namespace py = pybind11;
using namespace hyperwalk;
using io::Json;

namespace {

PatternHypergraph pattern_of(const std::string& text) {
  return io::pattern_from_json(io::parse_json_text(text, "pattern"), "pattern");
}

LoadingSchedule schedule_of(const std::vector<std::string>& tokens) {
  LoadingSchedule s;
  for (const auto& t : tokens) s.push_back(ScheduleElement::parse(t));
  return s;
}

std::uint64_t count_schedules(const std::string& pattern) {
  return count_complete_schedules(pattern_of(pattern));
}

bool is_valid(const std::string& pattern, const std::vector<std::string>& schedule) {
  return is_valid_schedule(pattern_of(pattern), schedule_of(schedule)).valid;
}

std::string cost(const std::string& pattern, const std::vector<std::string>& schedule,
                 const std::string& params) {
  const auto h = pattern_of(pattern);
  const auto p = io::params_from_json(io::parse_json_text(params, "params"), "params");
  return cost_exponent(h, schedule_of(schedule), p).overall.str();
}

std::string schedule_lp(const std::string& pattern, const std::vector<std::string>& schedule) {
  const auto res = solve_schedule(pattern_of(pattern), schedule_of(schedule));
  if (res.solution.status != LPStatus::Optimal) {
    throw Error(ErrorCode::Internal, to_string(res.solution.status));
  }
  return res.solution.optimum.str();
}

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"hyperwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  cli::RunConfig config;
  std::string message;
  if (auto code = cli::parse_args(static_cast<int>(argv.size()), argv.data(), config, message)) {
    return {*code, io::dump(Json{{"message", message}})};
  }
  try {
    const cli::Report rep = cli::run(config);
    return {rep.exit_code, io::dump(rep.body)};
  } catch (const Error& e) {
    return {cli::exit_code_for(e.code()),
            io::dump(Json{{"error", to_string(e.code())}, {"message", e.what()}})};
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "hyperwalk native core";
  static py::exception<Error> error(m, "HyperwalkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });
  m.def("count_schedules", &count_schedules, py::arg("pattern_json"));
  m.def("is_valid_schedule", &is_valid, py::arg("pattern_json"), py::arg("schedule"));
  m.def("cost_exponent", &cost, py::arg("pattern_json"), py::arg("schedule"),
        py::arg("params_json"));
  m.def("schedule_lp", &schedule_lp, py::arg("pattern_json"), py::arg("schedule"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run", &run, py::arg("args"), py::call_guard<py::gil_scoped_release>(),
        "Runs one CLI command; returns (exit_code, json_text).");
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
