#include <cbmw/cli/app.hpp>

int main(int argc, char** argv) {
  return cbmw::cli::run(argc, argv);
}
