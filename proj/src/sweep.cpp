#include "dotshape/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "dotshape/errors.hpp"
#include "dotshape/retrieval.hpp"

namespace dotshape {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::vector<Method> normalized_methods(const SweepOptions& opts) {
  std::vector<Method> ms;
  for (const Method m : {Method::mst, Method::surface})
    if (std::find(opts.methods.begin(), opts.methods.end(), m) !=
        opts.methods.end())
      ms.push_back(m);
  return ms;
}

}  // namespace

std::string run_sweep(const ShapeDb& db, const SweepOptions& opts) {
  if (opts.kmin < 3 || opts.kstep < 1 || opts.kmax < opts.kmin)
    fail(errc::bad_parameter, "invalid K grid");
  const std::vector<Method> methods = normalized_methods(opts);
  if (methods.empty()) fail(errc::bad_parameter, "no methods selected");

  std::vector<const ShapeRecord*> shapes;
  shapes.reserve(db.shapes.size());
  for (const auto& s : db.shapes) shapes.push_back(&s);
  std::sort(shapes.begin(), shapes.end(),
            [](const ShapeRecord* a, const ShapeRecord* b) {
              return a->outline.name < b->outline.name;
            });

  std::ostringstream csv;
  csv << "shape,method,K,xi,hamiltonian,runtime_ms\n";
  for (const ShapeRecord* shape : shapes) {
    for (const Method method : methods) {
      for (int k = opts.kmin; k <= opts.kmax; k += opts.kstep) {
        csv << shape->outline.name << ',' << method_name(method) << ',' << k
            << ',';
        try {
          const SampledShape sample = sample_uniform(shape->outline, k);
          const auto t0 = std::chrono::steady_clock::now();
          const GroupingResult result = method == Method::surface
                                            ? group_surface(sample.points)
                                            : group_mst(sample.points);
          const auto t1 = std::chrono::steady_clock::now();
          const double xi = grouping_score(result, sample.truth_edges);
          const double ms =
              opts.timing
                  ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                  : 0.0;
          csv << fixed(xi, 6) << ',';
          if (method == Method::surface)
            csv << (result.hamiltonian ? "true" : "false");
          else
            csv << "n/a";
          csv << ',' << fixed(ms, 3) << '\n';
        } catch (const Error& e) {
          csv << "error:" << errc_name(e.code()) << ",n/a,0.000\n";
        }
      }
    }
  }

  csv << "# summary\n";
  for (const ShapeRecord* shape : shapes) {
    for (const Method method : methods) {
      csv << "# m," << shape->outline.name << ',' << method_name(method)
          << ',';
      try {
        const auto m = m_metric(shape->outline, method);
        if (m.has_value())
          csv << *m << '\n';
        else
          csv << "-\n";
      } catch (const Error& e) {
        csv << "error:" << errc_name(e.code()) << '\n';
      }
    }
  }
  if (std::find(methods.begin(), methods.end(), Method::surface) !=
      methods.end()) {
    for (const ShapeRecord* shape : shapes) {
      csv << "# n," << shape->outline.name << ',';
      try {
        const RetrievalResult r =
            retrieve(db, shape->outline.name, opts.retrieval_cap);
        if (r.success)
          csv << r.n << '\n';
        else
          csv << "NO-TERMINATION\n";
      } catch (const Error& e) {
        csv << "error:" << errc_name(e.code()) << '\n';
      }
    }
  }
  return csv.str();
}

}  // namespace dotshape
