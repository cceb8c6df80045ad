#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "permcodes/codebook.hpp"
#include "permcodes/errors.hpp"

using namespace permcodes;

namespace {

Codebook sample_book() {
  return Codebook::from_cosets(4, 4, "demo", {canonical_rep(Permutation::identity(4)),
                                              canonical_rep(Permutation({1, 4, 3, 2}))});
}

}  // namespace

TEST(Codebook, TextFormat) {
  EXPECT_EQ(sample_book().to_text(), "# metric=cyclic\n# n=4\n# d=4\n# label=demo\n1 2 3 4\n1 4 3 2\n");
}

TEST(Codebook, RoundTripsBothForms) {
  const auto book = sample_book();
  EXPECT_EQ(Codebook::parse(book.to_text()), book);
  EXPECT_EQ(Codebook::parse(book.to_json()), book);
  const Codebook block(Metric::block, 3, 2, "b", {Permutation({2, 1, 3}), Permutation({3, 2, 1})});
  EXPECT_EQ(Codebook::parse(block.to_text()), block);
  EXPECT_EQ(Codebook::parse(block.to_json()), block);
}

TEST(Codebook, FilesRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "permcodes_codebook_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "book.txt";
  sample_book().write_files(path);
  EXPECT_EQ(Codebook::read_file(path), sample_book());
  EXPECT_EQ(Codebook::read_file(path.string() + ".json"), sample_book());
  std::filesystem::remove_all(dir);
  EXPECT_THROW(Codebook::read_file(dir / "missing.txt"), InvalidArgument);
}

TEST(Codebook, Validation) {
  const auto e = Permutation::identity(4);
  EXPECT_THROW(Codebook(Metric::block, 4, 1, "", {e, e}), InvalidArgument);
  EXPECT_THROW(Codebook(Metric::block, 4, 1, "", {e, Permutation::identity(5)}), InvalidArgument);
  EXPECT_THROW(Codebook(Metric::cyclic, 4, 1, "", {Permutation::cycle(4)}), InvalidArgument);
  EXPECT_THROW(Codebook(Metric::block, 4, 1, "a\nb", {e}), InvalidArgument);
}

TEST(Codebook, ParseErrorsCarryLineNumbers) {
  try {
    Codebook::parse("# metric=cyclic\n# n=4\n# d=4\n# label=x\n1 2 3 4\n1 2 z 4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(Codebook::parse("# metric=round\n# n=4\n# d=4\n# label=x\n"), ParseError);
  EXPECT_THROW(Codebook::parse("{\"metric\": 3}"), ParseError);
  EXPECT_THROW(parse_metric("other"), InvalidArgument);
}
