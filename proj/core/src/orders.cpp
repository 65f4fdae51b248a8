#include "crnkit/orders.hpp"

namespace crnkit {

Bindings RegimeOrders::to_bindings() const { return {{"p1", p1}, {"q1", q1}, {"p2", p2}, {"q2", q2}}; }

RegimeOrders RegimeOrders::from_bindings(const Bindings& bindings) {
  auto get = [&](const char* name) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw InputError(std::string("kinetic order ") + name + " is not bound");
    return it->second;
  };
  return {get("p1"), get("q1"), get("p2"), get("q2")};
}

std::string RegimeOrders::to_string() const {
  return "(" + crnkit::to_string(p1) + ", " + crnkit::to_string(q1) + ", " + crnkit::to_string(p2) + ", " +
         crnkit::to_string(q2) + ")";
}

}  // namespace crnkit
