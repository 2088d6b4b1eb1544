// Compares the serial and OpenMP multistart solvers on a fixture and checks
// that both return the same steady-state set.
#include "crn/io.hpp"

#include <chrono>
#include <iostream>

int main(int argc, char** argv) {
  using namespace crn;
  if (argc < 3) {
    std::cerr << "usage: multistart_bench <network.json> <k-file.json> [trials]\n";
    return 2;
  }
  try {
    const KineticSystem sys = load_network_file(argv[1]);
    const Eigen::VectorXd k = load_rate_file(argv[2], sys);
    SolveOptions opt;
    opt.trials = argc > 3 ? std::atoi(argv[3]) : 2000;

    auto timed = [&](bool parallel) {
      SolveOptions o = opt;
      o.parallel = parallel;
      auto t0 = std::chrono::steady_clock::now();
      SteadyStateSet set = find_steady_states(sys, k, o);
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::cout << (parallel ? "parallel" : "serial  ") << "  trials=" << o.trials
                << "  states=" << set.states.size() << "  time=" << ms << " ms\n";
      return set;
    };

    SteadyStateSet serial = timed(false);
    SteadyStateSet parallel = timed(true);
    if (serial.states.size() != parallel.states.size()) {
      std::cerr << "mismatch: serial and parallel state counts differ\n";
      return 1;
    }
    for (std::size_t i = 0; i < serial.states.size(); ++i)
      if ((serial.states[i] - parallel.states[i]).lpNorm<Eigen::Infinity>() > 1e-9) {
        std::cerr << "mismatch: state " << i << " differs between runs\n";
        return 1;
      }
    std::cout << "serial and parallel runs agree\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
