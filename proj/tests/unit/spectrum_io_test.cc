// Copyright 2026 The evospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evospec/spectrum_io.h"

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "evospec/errors.h"
#include "evospec/models.h"
#include "evospec/text_io.h"
#include "test_util.h"

namespace evospec {
namespace {

using testing::TempDir;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::size_t format_error_line(const std::string& s_path,
                              const std::string& b_path) {
  try {
    load_spectrum_files(s_path, b_path);
  } catch (const FormatError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected FormatError";
  return 0;
}

TEST(TextIoTest, DoublesRoundTripExactly) {
  for (double v : {0.0, -0.0, 1.0, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324,
                   -17646.5, 125.66}) {
    double back = 1.0;
    ASSERT_TRUE(parse_double(format_double(v), back));
    EXPECT_EQ(back, v);
  }
  EXPECT_EQ(format_double(125.66), "125.66");
  EXPECT_EQ(format_double(20.0), "20");
  double d;
  EXPECT_FALSE(parse_double("1.5x", d));
  EXPECT_FALSE(parse_double("", d));
  std::uint64_t u;
  EXPECT_TRUE(parse_uint("42", u));
  EXPECT_EQ(u, 42u);
  EXPECT_FALSE(parse_uint("-1", u));
}

TEST(TextIoTest, UncommittedFileLeavesNothing) {
  TempDir dir("atomic");
  const std::string path = dir.file("out.csv");
  {
    AtomicFile f(path);
    f.write("partial");
  }
  EXPECT_TRUE(std::filesystem::is_empty(dir.path()));
  {
    AtomicFile f(path);
    f.write("done\n");
    f.commit();
  }
  EXPECT_EQ(read_file(path), "done\n");
}

TEST(TextIoTest, UnwritableLocationThrowsIoError) {
  TempDir dir("blocked");
  const std::string blocker = dir.file("plain_file");
  write_text(blocker, "x");
  EXPECT_THROW(AtomicFile(blocker + "/child.csv"), IoError);
  EXPECT_THROW(read_file(dir.file("missing")), IoError);
}

TEST(SpectrumIoTest, Example1RoundTripIsLossless) {
  TempDir dir("roundtrip");
  const SimulationGrid g = make_grid(32, 64, 4.02, 200.0);
  const SpectralModel model = model_example1(g);
  write_spectrum_csv(dir.file("s.csv"), model.S);
  write_bispectrum_csv(dir.file("b.csv"), model.B);
  const SpectralModel back =
      load_spectrum_files(dir.file("s.csv"), dir.file("b.csv"));
  ASSERT_TRUE(same_grid(back.S.grid(), g));
  EXPECT_EQ(back.S.values(), model.S.values());
  EXPECT_FALSE(back.B.is_lazy());
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t k = 0; k < g.N; ++k) {
      for (std::size_t j = 0; 2 * j <= k; ++j) {
        ASSERT_EQ(back.B.at(m, k - j, j), model.B.at(m, k - j, j));
      }
    }
  }
  // Re-export is byte-identical.
  write_spectrum_csv(dir.file("s2.csv"), back.S);
  write_bispectrum_csv(dir.file("b2.csv"), back.B);
  EXPECT_EQ(read_file(dir.file("s.csv")), read_file(dir.file("s2.csv")));
  EXPECT_EQ(read_file(dir.file("b.csv")), read_file(dir.file("b2.csv")));
}

TEST(SpectrumIoTest, ComplexRandomRoundTrip) {
  TempDir dir("complex");
  const SimulationGrid g = testing::exact_grid(9, 18, 2.0);
  const EvolutionarySpectrum S = testing::random_spectrum(g, 3);
  const EvolutionaryBispectrum B = testing::random_bispectrum(S, 4);
  write_spectrum_csv(dir.file("s.csv"), S);
  write_bispectrum_csv(dir.file("b.csv"), B);
  const SpectralModel back =
      load_spectrum_files(dir.file("s.csv"), dir.file("b.csv"));
  EXPECT_EQ(back.S.values(), S.values());
  for (std::size_t m = 0; m < g.M; ++m) {
    for (std::size_t i = 0; i < g.N; ++i) {
      for (std::size_t j = 0; j < g.N; ++j) {
        ASSERT_EQ(back.B.full(m, i, j), B.full(m, i, j));
      }
    }
  }
}

TEST(SpectrumIoTest, HeaderCarriesGrid) {
  EXPECT_EQ(grid_header("EPS", make_grid(400, 800, 125.66, 20.0)),
            "EPS,400,800,125.66,20\n");
}

class SpectrumRejectTest : public ::testing::Test {
 protected:
  void SetUp() override {
    // N = 4, M = 5
    s_ok = "EPS,4,5,1,1\n";
    for (int m = 0; m < 5; ++m) s_ok += "0,1,2,3\n";
    b_ok = "EBS,4,5,1,1\n0,1,1,0.1,0\n4,2,1,0.2,-0.1\n";
    write_text(dir.file("s_ok"), s_ok);
    write_text(dir.file("b_ok"), b_ok);
  }
  std::size_t bad_spectrum(const std::string& text) {
    write_text(dir.file("s_bad"), text);
    return format_error_line(dir.file("s_bad"), dir.file("b_ok"));
  }
  std::size_t bad_bispectrum(const std::string& text) {
    write_text(dir.file("b_bad"), text);
    return format_error_line(dir.file("s_ok"), dir.file("b_bad"));
  }
  TempDir dir{"reject"};
  std::string s_ok, b_ok;
};

TEST_F(SpectrumRejectTest, AcceptsValidPair) {
  const SpectralModel m = load_spectrum_files(dir.file("s_ok"), dir.file("b_ok"));
  EXPECT_EQ(m.S(2, 3), 3.0);
  EXPECT_EQ(m.B.at(4, 2, 1), Complex(0.2, -0.1));
  EXPECT_EQ(m.B.at(3, 2, 1), Complex(0.0, 0.0));
}

TEST_F(SpectrumRejectTest, NonzeroAtZeroFrequency) {
  // S[3][0] = 0.1 sits on line 5.
  EXPECT_EQ(bad_spectrum("EPS,4,5,1,1\n0,1,2,3\n0,1,2,3\n0,1,2,3\n0.1,1,2,3\n"
                         "0,1,2,3\n"),
            5u);
}

TEST_F(SpectrumRejectTest, NegativeValue) {
  EXPECT_EQ(bad_spectrum("EPS,4,5,1,1\n0,1,2,3\n0,1,-2,3\n0,1,2,3\n0,1,2,3\n"
                         "0,1,2,3\n"),
            3u);
}

TEST_F(SpectrumRejectTest, MalformedHeaderAndRows) {
  EXPECT_EQ(bad_spectrum("EPX,4,5,1,1\n"), 1u);
  EXPECT_EQ(bad_spectrum("EPS,4,5,1\n"), 1u);
  EXPECT_EQ(bad_spectrum("EPS,4,five,1,1\n"), 1u);
  EXPECT_EQ(bad_spectrum("EPS,0,5,1,1\n"), 1u);
  EXPECT_EQ(bad_spectrum("EPS,4,5,1,1\n0,1,2\n"), 2u);
  EXPECT_EQ(bad_spectrum("EPS,4,5,1,1\n0,1,2,3\n0,1,zz,3\n"), 3u);
  // too few rows: reported at the last line read
  EXPECT_GT(bad_spectrum("EPS,4,5,1,1\n0,1,2,3\n"), 0u);
}

TEST_F(SpectrumRejectTest, OutsideTriangle) {
  // i + j = N
  EXPECT_EQ(bad_bispectrum("EBS,4,5,1,1\n0,1,1,0.1,0\n0,3,1,0.1,0\n"), 3u);
  // j > i
  EXPECT_EQ(bad_bispectrum("EBS,4,5,1,1\n0,1,2,0.1,0\n"), 2u);
  EXPECT_EQ(bad_bispectrum("EBS,4,5,1,1\n5,1,1,0.1,0\n"), 2u);
}

TEST_F(SpectrumRejectTest, NonzeroAtZeroIndex) {
  EXPECT_EQ(bad_bispectrum("EBS,4,5,1,1\n0,1,1,0.1,0\n2,3,0,0,0.5\n"), 3u);
}

TEST_F(SpectrumRejectTest, DuplicateAndGridMismatch) {
  EXPECT_EQ(bad_bispectrum("EBS,4,5,1,1\n0,1,1,0.1,0\n\n0,1,1,0.1,0\n"), 4u);
  EXPECT_EQ(bad_bispectrum("EBS,4,6,1,1\n"), 1u);
  EXPECT_EQ(bad_bispectrum("EBS,4,5,1,1\n0,1,1,0.1\n"), 2u);
}

TEST_F(SpectrumRejectTest, MissingFileIsIoError) {
  EXPECT_THROW(load_spectrum_files(dir.file("nope"), dir.file("b_ok")),
               IoError);
}

}  // namespace
}  // namespace evospec
