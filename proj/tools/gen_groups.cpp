// Regenerates the bundled group description files under data/groups/.
// Usage: gen-groups OUTPUT_DIR

#include <fstream>
#include <iostream>
#include <string>

#include "snap/backend.hpp"

namespace {

int write_spec(const std::string& dir, const std::string& name,
               const snap::GroupSpec& spec) {
  const std::string path = dir + "/" + name + ".json";
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 1;
  }
  out << spec.to_json() << '\n';
  std::cout << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen-groups OUTPUT_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  int rc = 0;
  rc |= write_spec(dir, "alt9", snap::GroupSpec::alt(9));
  rc |= write_spec(dir, "sym12", snap::GroupSpec::sym(12));
  rc |= write_spec(dir, "c30", snap::cyclic_spec(30));
  rc |= write_spec(dir, "d20", snap::dihedral_spec(20));
  rc |= write_spec(dir, "psl28", snap::psl_2_8_spec());
  rc |= write_spec(dir, "m11", snap::m11_spec());
  return rc;
}
