#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "ccc/code.hpp"
#include "ccc/code_io.hpp"
#include "ccc/transform.hpp"
#include "oracles.hpp"

using namespace ccc;

TEST(Composition, NormalizesAndRejectsEmpty) {
    EXPECT_EQ(Composition({1, 2, 0}).counts(), (std::vector<int>{2, 1}));
    EXPECT_THROW(Composition({0, 0}), std::invalid_argument);
    EXPECT_THROW(Composition({-1, 2}), std::invalid_argument);
    EXPECT_EQ(Composition::parse("2,1,1"), (Composition{2, 1, 1}));
    EXPECT_THROW(Composition::parse("1,2"), std::invalid_argument);
    EXPECT_THROW(Composition::parse("2,,1"), std::invalid_argument);
    EXPECT_EQ((Composition{2, 1}).to_string(), "[2,1]");
}

TEST(CodeParams, Validation) {
    EXPECT_THROW(CodeParams(3, 5, 4, Composition{1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(CodeParams(3, 2, 4, Composition{2, 1}), std::invalid_argument);
    EXPECT_THROW(CodeParams(37, 5, 4, Composition{2, 1}), std::invalid_argument);
    EXPECT_TRUE(CodeParams(3, 4, 7, Composition{2, 1}).forces_single_word());
}

TEST(HammingDistance, Examples) {
    EXPECT_EQ(hamming_distance(Codeword{1, 2, 0, 3, 0, 0, 0}, Codeword{0, 1, 2, 0, 3, 0, 0}), 5);
    Codeword u{1, 1, 2, 0, 0};
    EXPECT_EQ(hamming_distance(u, u), 0);
    EXPECT_EQ(hamming_distance(Codeword{1, 1, 2, 0, 0}, Codeword{2, 1, 1, 0, 0}), 2);
    EXPECT_THROW(hamming_distance(Codeword{1, 0}, Codeword{1, 0, 0}), std::invalid_argument);
}

TEST(HammingDistance, TriangleInequalityOnRandomTriples) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> sym(0, 3);
    for (int t = 0; t < 2000; ++t) {
        std::vector<std::uint8_t> a(9), b(9), c(9);
        for (int i = 0; i < 9; ++i) {
            a[i] = static_cast<std::uint8_t>(sym(rng));
            b[i] = static_cast<std::uint8_t>(sym(rng));
            c[i] = static_cast<std::uint8_t>(sym(rng));
        }
        Codeword u(a), v(b), w(c);
        EXPECT_LE(hamming_distance(u, w), hamming_distance(u, v) + hamming_distance(v, w));
        EXPECT_EQ(hamming_distance(u, v), hamming_distance(v, u));
    }
}

TEST(CompositionOf, Examples) {
    EXPECT_EQ(composition_of(Codeword{1, 1, 2, 0, 0}, 3), (Composition{2, 1}));
    EXPECT_EQ(composition_of(Codeword{3, 2, 1, 0, 0, 0, 0}, 4), (Composition{1, 1, 1}));
    EXPECT_THROW(composition_of(Codeword{0, 0, 0}, 3), std::invalid_argument);
}

TEST(MinDistance, Examples) {
    EXPECT_EQ(min_distance(cyclic_distance5_code(7)), 5);
    Code disjoint(CodeParams(3, 6, 6, Composition{2, 1}), {Codeword{1, 1, 2, 0, 0, 0}, Codeword{0, 0, 0, 1, 1, 2}});
    EXPECT_EQ(min_distance(disjoint), 6);
    EXPECT_THROW(min_distance(Code(CodeParams(3, 6, 6, Composition{2, 1}), {Codeword{1, 1, 2, 0, 0, 0}})), std::invalid_argument);
}

TEST(VerifyCode, ReportsEachKind) {
    CodeParams p(3, 5, 4, Composition{2, 1});
    Code good(p, {Codeword{1, 1, 2, 0, 0}, Codeword{0, 0, 1, 1, 2}});
    EXPECT_TRUE(verify_code(good).ok());

    Code bad_comp(p, {Codeword{1, 1, 2, 0, 0}, Codeword{0, 0, 1, 2, 2}});
    auto r = verify_code(bad_comp);
    ASSERT_EQ(r.count(ViolationKind::composition), 1U);
    EXPECT_EQ(r.violations.front().subjects, (std::vector<std::int64_t>{1}));

    Code close(p, {Codeword{1, 1, 2, 0, 0}, Codeword{1, 2, 1, 0, 0}});
    r = verify_code(close);
    ASSERT_EQ(r.count(ViolationKind::distance), 1U);
    EXPECT_EQ(r.violations.front().measured, 2);

    Code dup(p, {Codeword{1, 1, 2, 0, 0}, Codeword{1, 1, 2, 0, 0}});
    EXPECT_EQ(verify_code(dup).count(ViolationKind::duplicate), 1U);

    Code wrong_len(p, {Codeword{1, 1, 2, 0}});
    EXPECT_EQ(verify_code(wrong_len).count(ViolationKind::length), 1U);

    Code wrong_sym(p, {Codeword{1, 1, 3, 0, 0}});
    EXPECT_GE(verify_code(wrong_sym).count(ViolationKind::symbol), 1U);
}

TEST(VerifyCode, CanonicalSymbolAssignment) {
    // Composition [2,1] means two 1s and one 2; two 2s and one 1 is rejected.
    CodeParams p(3, 5, 2, Composition{2, 1});
    EXPECT_FALSE(verify_code(Code(p, {Codeword{2, 2, 1, 0, 0}})).ok());
}

TEST(Refinement, Examples) {
    auto part = is_refinement(Composition{2, 1, 1}, Composition{2, 2});
    ASSERT_TRUE(part);
    EXPECT_EQ(*part, (RefinementPartition{{0}, {1, 2}}));
    EXPECT_FALSE(is_refinement(Composition{2, 2}, Composition{3, 1}));
    auto identity = is_refinement(Composition{3, 1}, Composition{3, 1});
    ASSERT_TRUE(identity);
    EXPECT_EQ(*identity, (RefinementPartition{{0}, {1}}));
}

TEST(Refinement, RelabelsLeftToRight) {
    Code c(CodeParams(3, 10, 2, Composition{2, 2}), {Codeword::parse("1122000000")});
    Code r = refine_code(c, Composition{2, 1, 1}, {{0}, {1, 2}}, 4);
    ASSERT_EQ(r.size(), 1U);
    EXPECT_EQ(r.words[0].to_string(), "1123000000");
    EXPECT_EQ(r.params.comp, (Composition{2, 1, 1}));
    EXPECT_EQ(r.params.q, 4);

    Code same = refine_code(c, Composition{2, 2}, {{0}, {1}}, 3);
    EXPECT_EQ(same.words, c.words);

    EXPECT_THROW(refine_code(c, Composition{2, 1, 1}, {{0}, {1}}, 4), std::invalid_argument);
    EXPECT_THROW(refine_code(c, Composition{2, 1, 1}, {{0}, {1, 2}}, 3), std::invalid_argument);
}

TEST(Shorten, KeepsZeroWordsAndDistance) {
    Code c = cyclic_distance5_code(9);
    for (int r = 0; r < 9; ++r) {
        Code s = shorten_code(c, r);
        EXPECT_EQ(s.params.n, 8);
        EXPECT_TRUE(verify_code(s).ok());
        EXPECT_EQ(s.size(), 6U);  // 3 of the 9 shifts are nonzero at r
    }
    Code one(CodeParams(3, 4, 4, Composition{2, 1}), {Codeword{1, 1, 2, 0}});
    EXPECT_TRUE(shorten_code(one, 0).empty());
    EXPECT_THROW(shorten_code(one, 4), std::out_of_range);
}

TEST(CyclicDistance5, SmallLengths) {
    Code c7 = cyclic_distance5_code(7);
    EXPECT_EQ(c7.size(), 7U);
    EXPECT_TRUE(verify_code(c7).ok());
    Code c10 = cyclic_distance5_code(10);
    EXPECT_EQ(c10.size(), 10U);
    EXPECT_TRUE(verify_code(c10).ok());
    EXPECT_THROW(cyclic_distance5_code(6), std::invalid_argument);
}

TEST(CodeFile, RoundTrip) {
    Code c = cyclic_distance5_code(8);
    std::string text = write_code_string(c);
    EXPECT_EQ(text.substr(0, text.find('\n')), "ccc q=4 n=8 d=5 comp=1,1,1");
    Code back = read_code_string(text);
    EXPECT_EQ(back.params, c.params);
    EXPECT_EQ(back.words, c.words);
}

TEST(CodeFile, HighSymbols) {
    std::vector<std::uint8_t> word;
    for (int s = 1; s <= 35; ++s) word.push_back(static_cast<std::uint8_t>(s));
    Code c(CodeParams(36, 35, 2, Composition(std::vector<int>(35, 1))), {Codeword(word)});
    Code back = read_code_string(write_code_string(c));
    EXPECT_EQ(back.words[0].to_string().back(), 'z');
    EXPECT_EQ(back.words, c.words);
}

TEST(CodeFile, CommentsAndStrictErrors) {
    Code c = read_code_string("# a comment\nccc q=3 n=5 d=4 comp=2,1\n# another\n11200\n00112\n");
    EXPECT_EQ(c.size(), 2U);

    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            read_code_string(text);
        } catch (const format_error& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("ccc q=3 n=5 d=4 comp=2,1\n11200\n1120\n"), 3U);
    EXPECT_EQ(line_of("ccc q=3 n=5 d=4 comp=2,1\n11200\n11300\n"), 3U);
    EXPECT_EQ(line_of("ccc q=3 n=5 d=4 comp=2,1\n11200"), 2U);
    EXPECT_EQ(line_of("ccc q=3 n=5 d=4\n11200\n"), 1U);
    EXPECT_EQ(line_of("ccc  q=3 n=5 d=4 comp=2,1\n"), 1U);
    EXPECT_EQ(line_of("ccc q=3 n=5 d=4 comp=1,2\n"), 1U);
    EXPECT_EQ(line_of("ccc q=3 n=5 d=4 comp=2,1\n11 00\n"), 2U);
    EXPECT_THROW(read_code_string(""), format_error);
}

TEST(CodeFile, FileErrorsNameThePath) {
    auto dir = std::filesystem::path(CCC_TEST_TMP) / "code_file";
    std::filesystem::create_directories(dir);
    auto path = dir / "bad.ccc";
    {
        std::ofstream out(path);
        out << "ccc q=3 n=5 d=4 comp=2,1\n1120x\n";
    }
    try {
        read_code_file(path);
        FAIL() << "expected format_error";
    } catch (const format_error& e) {
        EXPECT_NE(std::string(e.what()).find("bad.ccc"), std::string::npos);
        EXPECT_EQ(e.line(), 2U);
    }
    EXPECT_THROW(read_code_file(dir / "missing.ccc"), format_error);
}
