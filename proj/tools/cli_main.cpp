// sntab command-line interface (placeholder; subcommands land with their
// modules).
#include <CLI11.hpp>

int main(int argc, char** argv) {
  CLI::App app{"sntab: tableau proof kernel for arithmetic with strong negation"};
  app.require_subcommand(0);
  CLI11_PARSE(app, argc, argv);
  return 2;
}
