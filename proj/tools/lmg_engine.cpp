// Command-line front end: cycle, sweep, interference, geometry, squeezed,
// figure <preset>. Exit codes: 0 ok, 2 usage, 3 numeric failure, 4 I/O.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "lmg/errors.hpp"
#include "lmg/io/config.hpp"
#include "lmg/io/pipelines.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;
constexpr int kIo = 4;

int fail(int code, const char* kind, const std::exception& e) {
  std::fprintf(stderr, "lmg_engine: %s: %s\n", kind, e.what());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const lmg::io::RunConfig cfg = lmg::io::parse_config(args);
    if (cfg.help) {
      std::fputs(cfg.help_text.c_str(), stdout);
      return kOk;
    }
    const auto artifacts = lmg::io::run_command(cfg);
    for (const std::string& path : lmg::io::write_artifacts(cfg, artifacts)) std::printf("%s\n", path.c_str());
    return kOk;
  } catch (const lmg::IoError& e) {
    return fail(kIo, "I/O error", e);
  } catch (const lmg::io::ConfigError& e) {
    return fail(kUsage, "usage error", e);
  } catch (const lmg::InvalidSector& e) {
    return fail(kUsage, "usage error", e);
  } catch (const lmg::InvalidCoupling& e) {
    return fail(kUsage, "usage error", e);
  } catch (const lmg::InvalidTemperature& e) {
    return fail(kUsage, "usage error", e);
  } catch (const lmg::InvalidSqueezing& e) {
    return fail(kUsage, "usage error", e);
  } catch (const lmg::InvalidLabel& e) {
    return fail(kUsage, "usage error", e);
  } catch (const std::exception& e) {
    return fail(kNumeric, "numeric failure", e);
  }
}
