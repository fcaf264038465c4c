#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "cli.hpp"

namespace {
std::atomic<bool> interrupted{false};
extern "C" void on_sigint(int) { interrupted.store(true); }
}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::stop_source stop;
  std::signal(SIGINT, on_sigint);
  // Signal handlers may only touch the atomic; this thread forwards it.
  std::jthread watcher([&](std::stop_token self) {
    while (!self.stop_requested()) {
      if (interrupted.load()) {
        stop.request_stop();
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
  });
  return ellsurf::cli::run(args, std::cout, std::cerr, stop.get_token());
}
