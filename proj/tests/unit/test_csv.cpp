#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fracosc/csv.hpp"
#include "property.hpp"

using namespace fracosc;

TEST_CASE("numbers round-trip through the CSV text") {
  testing::for_all(80, 1000, [](testing::Gen& g, int) {
    const double v = g.uniform(-1.0, 1.0) * std::pow(10.0, g.integer(-300, 300));
    CHECK(std::stod(format_number(v)) == v);
  });
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("csv and dat writers") {
  const auto dir = std::filesystem::temp_directory_path() / "fracosc_csv_test";
  std::filesystem::create_directories(dir);
  CsvTable t{{"t", "x"}, {}};
  t.add_row({"0", "1"});
  t.add_row({"1", "2"});
  CHECK_THROWS(t.add_row({"1"}));
  write_csv(dir / "a.csv", t);
  write_dat(dir / "a.dat", t);
  std::ifstream a(dir / "a.csv", std::ios::binary);
  std::stringstream sa;
  sa << a.rdbuf();
  CHECK(sa.str() == "t,x\n0,1\n1,2\n");
  std::ifstream b(dir / "a.dat", std::ios::binary);
  std::stringstream sb;
  sb << b.rdbuf();
  CHECK(sb.str() == "# t x\n0 1\n1 2\n");
  CHECK_FALSE(std::filesystem::exists(dir / "a.csv.tmp"));
  std::filesystem::remove_all(dir);
}
