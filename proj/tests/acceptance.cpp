#include <iostream>

#include "nk6/acceptance.hpp"

int main() {
  const auto results = nk6::run_acceptance(nk6::AcceptanceOptions{});
  std::cout << nk6::acceptance_summary(results);
  bool ok = true;
  for (const auto& c : results) {
    if (c.passed()) continue;
    ok = false;
    std::cout << "--- criterion " << c.number << " " << c.title << "\n" << c.report.to_text();
  }
  return ok ? 0 : 1;
}
