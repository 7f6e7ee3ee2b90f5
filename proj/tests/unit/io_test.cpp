#include <gtest/gtest.h>

#include <sstream>

#include <tifl/envelope.hpp>
#include <tifl/io.hpp>

using namespace tifl;

TEST(Io, NumbersRoundTripWithoutLocale) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.125, 1e22}) EXPECT_EQ(std::stod(format_number(v)), v);
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.5), "0.5");
}

TEST(Io, EnvelopeCsvRowsFollowMask) {
  const EnvelopeMap map = envelope_plane(make_symmetric_montage(90, 40, 0, 1, 1), SphereModel{}, {Plane::XY, 17, 0.0});
  std::ostringstream os;
  write_envelope_csv(os, map.grid);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,z,am_max");
  std::size_t rows = 0;
  double prev_y = -2.0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream ls(line);
    std::string x, y;
    std::getline(ls, x, ',');
    std::getline(ls, y, ',');
    EXPECT_GE(std::stod(y), prev_y);
    prev_y = std::stod(y);
  }
  EXPECT_EQ(rows, map.grid.inside_count());
}

TEST(Io, FieldsCsvHeader) {
  const auto fields = sample_plane(make_symmetric_montage(90, 40, 0, 1, 1), SphereModel{}, {Plane::XZ, 17, 0.0});
  std::ostringstream os;
  write_fields_csv(os, fields, true);
  EXPECT_EQ(os.str().substr(0, 17), "x,y,z,V,Ex,Ey,Ez\n");
}

TEST(Io, PgmIsMaxNormalizedWithTopRowUp) {
  PlaneGrid<double> g;
  g.spec = {Plane::XY, 16, 0.0};
  g.mask.assign(256, 1);
  g.values.assign(256, 0.0);
  g.values[255] = 4.0;  // last row = largest y, last column
  g.values[0] = 2.0;
  std::ostringstream os;
  write_pgm(os, g);
  const std::string s = os.str();
  const std::string header = "P5\n16 16\n255\n";
  ASSERT_EQ(s.size(), header.size() + 256);
  EXPECT_EQ(s.substr(0, header.size()), header);
  EXPECT_EQ(static_cast<unsigned char>(s[header.size() + 15]), 255);
  EXPECT_EQ(static_cast<unsigned char>(s[header.size() + 240]), 128);
}

TEST(Io, ScenarioCsvColumns) {
  const ScenarioResult r = run_scenario(scenario_preset("b"), SphereModel{}, 33);
  std::ostringstream os;
  write_scenario_csv(os, r, Plane::XY);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "param,argmax_x,argmax_y,argmax_z,peak,extent,region,depth");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 4), "0.5,");
  EXPECT_NE(line.find("R_21"), std::string::npos);
}
