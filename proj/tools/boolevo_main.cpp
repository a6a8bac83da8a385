#include "boolevo/cli.hpp"

int main(int argc, char** argv) {
  return boolevo::cli_main(argc, argv);
}
