// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <iostream>

#include "pisot/verify/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& c : pisot::verify::criteria()) {
    const auto r = pisot::verify::run(c);
    std::cout << pisot::verify::format_line(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
