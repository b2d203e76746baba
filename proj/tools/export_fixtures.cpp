// Writes the built-in fixtures into a data directory.

#include <filesystem>
#include <iostream>

#include "vnalg/fixtures.hpp"
#include "vnalg/io.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path(VNALG_DATA_DIR);
  fs::create_directories(root / "algebras");
  fs::create_directories(root / "diagrams");
  vnalg::io::write_file(root / "algebras" / "n3.json", vnalg::io::format_algebra(vnalg::fixtures::n3_algebra()));
  vnalg::io::write_file(root / "algebras" / "n4.json", vnalg::io::format_algebra(vnalg::fixtures::n4_algebra()));
  for (const auto& name : vnalg::fixtures::diagram_names())
    vnalg::io::write_file(root / "diagrams" / (name + ".json"),
                          vnalg::io::format_diagram(vnalg::fixtures::diagram(name)));
  std::cout << "wrote fixtures to " << root.string() << "\n";
}
