#include "rstar/ring_spec.hpp"
#include "rstar/star.hpp"

int main() {
  const auto ring = rstar::parse_ring_spec("Z/12");
  return rstar::star_check_finite(ring).satisfied ? 0 : 1;
}
