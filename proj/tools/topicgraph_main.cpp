#include <iostream>

#include "topicgraph/cli.hpp"

int main(int argc, char** argv) {
  return topicgraph::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
