"""SFT construction, normalization, and membership tests.

Oracles here are independent of the library: forbidden sets are recomputed
by direct word enumeration and substring scans, then compared against the
engine's code-based representations.
"""

import itertools
import random

import numpy as np
import pytest

from borelchi import (
    Alphabet,
    CapacityError,
    GeneratorSet,
    Sft,
    coloring_sft,
    decode_word,
    encode_word,
    is_allowed,
    normalize,
    parse_sft_text,
    sft_to_text,
)


def all_words(b, length):
    return [tuple(w) for w in itertools.product(range(b), repeat=length)]


def occurs(pattern, word):
    """Contiguous-subword test by direct scanning."""
    k = len(pattern)
    return any(tuple(word[i : i + k]) == tuple(pattern) for i in range(len(word) - k + 1))


def coloring_forbidden_oracle(gens, b):
    """Brute-force forbidden set for a coloring SFT."""
    ell = max(gens) + 1
    out = set()
    for w in all_words(b, ell):
        if any(w[i] == w[i + a] for a in gens for i in range(ell - a)):
            out.add(w)
    return out


class TestEncoding:
    def test_roundtrip_examples(self):
        assert encode_word((0, 1, 2), 3) == 5
        assert decode_word(5, 3, 3) == (0, 1, 2)
        assert encode_word((), 4) == 0

    def test_roundtrip_random(self):
        rng = random.Random(7)
        for _ in range(200):
            b = rng.randint(1, 6)
            length = rng.randint(0, 8)
            word = tuple(rng.randrange(b) for _ in range(length))
            assert decode_word(encode_word(word, b), b, length) == word

    def test_lexicographic_order_matches_numeric(self):
        words = all_words(3, 3)
        codes = [encode_word(w, 3) for w in words]
        assert codes == sorted(codes)
        assert words == sorted(words)

    def test_symbol_out_of_range(self):
        with pytest.raises(ValueError):
            encode_word((0, 2), 2)
        with pytest.raises(ValueError):
            decode_word(100, 2, 3)


class TestAlphabetAndGenerators:
    def test_alphabet_validation(self):
        assert Alphabet(1).size == 1
        with pytest.raises(ValueError):
            Alphabet(0)

    def test_generator_validation(self):
        g = GeneratorSet((1, 5, 8))
        assert g.n == 3 and g.max_generator == 8
        with pytest.raises(ValueError):
            GeneratorSet((2, 4))
        with pytest.raises(ValueError):
            GeneratorSet((3, 1))
        with pytest.raises(ValueError):
            GeneratorSet(())
        with pytest.raises(ValueError):
            GeneratorSet((0, 1))

    def test_parse_and_str(self):
        g = GeneratorSet.parse("1, 5, 8")
        assert g.generators == (1, 5, 8)
        assert str(g) == "1,5,8"
        assert GeneratorSet.parse("2 3").generators == (2, 3)
        with pytest.raises(ValueError):
            GeneratorSet.parse("")


class TestNormalize:
    def test_already_uniform(self):
        sft = normalize(2, [(0,)])
        assert sft.window_len == 1
        assert sft.forbidden_words() == {(0,)}

    def test_prefix_extension(self):
        sft = normalize(2, [(0,), (1, 1)])
        assert sft.window_len == 2
        assert sft.forbidden_words() == {(0, 0), (0, 1), (1, 1)}

    def test_mixed_lengths_base3(self):
        sft = normalize(3, [(0, 1), (2,)])
        assert sft.window_len == 2
        assert sft.forbidden_words() == {(0, 1), (2, 0), (2, 1), (2, 2)}

    def test_idempotent(self):
        sft = normalize(3, [(0, 1), (2,)])
        again = normalize(3, sorted(sft.forbidden_words()))
        assert again.window_len == sft.window_len
        assert np.array_equal(again.forbidden_codes, sft.forbidden_codes)

    def test_empty_pattern_list_is_full_shift(self):
        sft = normalize(2, [])
        assert sft.window_len == 1 and sft.num_forbidden == 0 and sft.num_allowed == 2

    def test_errors(self):
        with pytest.raises(ValueError):
            normalize(2, [()])
        with pytest.raises(ValueError):
            normalize(2, [(0, 2)])

    def test_budget(self):
        with pytest.raises(CapacityError):
            normalize(2, [(0,), (1,) * 40], budget=1000)

    def test_avoidance_preserved_one_sided(self):
        """A word avoiding the input patterns has only allowed windows."""
        rng = random.Random(3)
        for _ in range(40):
            b = rng.randint(2, 3)
            pats = []
            for _ in range(rng.randint(1, 3)):
                k = rng.randint(1, 3)
                pats.append(tuple(rng.randrange(b) for _ in range(k)))
            sft = normalize(b, pats)
            ell = sft.window_len
            for w in all_words(b, min(ell + 3, 6)):
                if not any(occurs(p, w) for p in pats):
                    for i in range(len(w) - ell + 1):
                        assert is_allowed(sft, w[i : i + ell])

    def test_avoidance_equivalence_cyclic(self):
        """For periodic words the equivalence is two-sided.

        The biinfinite repetition of w avoids the input patterns iff every
        cyclic window of length window_len is allowed in the normal form.
        """
        rng = random.Random(4)
        for _ in range(40):
            b = rng.randint(2, 3)
            pats = []
            for _ in range(rng.randint(1, 3)):
                k = rng.randint(1, 3)
                pats.append(tuple(rng.randrange(b) for _ in range(k)))
            sft = normalize(b, pats)
            ell = sft.window_len
            for length in range(1, min(ell + 3, 5) + 1):
                for w in all_words(b, length):
                    reps = w * (2 * max(ell, max(len(p) for p in pats)) // length + 2)
                    infinite_avoids = not any(occurs(p, reps) for p in pats)
                    doubled = w * (ell // length + 2)
                    windows_ok = all(
                        is_allowed(sft, doubled[i : i + ell]) for i in range(length)
                    )
                    assert infinite_avoids == windows_ok


class TestColoringSft:
    def test_single_generator(self):
        sft = coloring_sft(GeneratorSet((1,)), 2)
        assert sft.window_len == 2
        assert sft.forbidden_words() == {(0, 0), (1, 1)}

    def test_pair_12_three_colors(self):
        sft = coloring_sft(GeneratorSet((1, 2)), 3)
        assert sft.window_len == 3
        assert sft.num_forbidden == 21
        rainbow = {w for w in all_words(3, 3) if len(set(w)) == 3}
        assert sft.forbidden_words() == set(all_words(3, 3)) - rainbow

    def test_against_bruteforce_oracle(self):
        for gens, b in [((1,), 3), ((1, 2), 2), ((2, 3), 3), ((1, 3), 4), ((1, 2, 3), 3)]:
            sft = coloring_sft(GeneratorSet(gens), b)
            assert sft.forbidden_words() == coloring_forbidden_oracle(gens, b)

    def test_1_5_8_against_oracle(self):
        sft = coloring_sft(GeneratorSet((1, 5, 8)), 3)
        oracle = coloring_forbidden_oracle((1, 5, 8), 3)
        assert sft.window_len == 9
        assert sft.num_forbidden == len(oracle)
        assert sft.num_allowed == 3**9 - len(oracle)
        picks = sorted(oracle)[:: max(1, len(oracle) // 50)]
        for w in picks:
            assert sft.is_forbidden_code(encode_word(w, 3))

    def test_reversal_symmetry(self):
        for gens, b in [((1, 2), 3), ((1, 3), 3), ((2, 3), 4)]:
            sft = coloring_sft(GeneratorSet(gens), b)
            words = sft.forbidden_words()
            assert all(tuple(reversed(w)) in words for w in words)

    def test_allowed_count_nondecreasing_in_colors(self):
        for gens in [(1,), (1, 2), (1, 3), (2, 3), (1, 4), (1, 2, 3)]:
            counts = [coloring_sft(GeneratorSet(gens), b).num_allowed for b in (1, 2, 3, 4)]
            assert counts == sorted(counts)

    def test_budget(self):
        with pytest.raises(CapacityError):
            coloring_sft(GeneratorSet((1, 9)), 10, budget=10**6)


class TestSftType:
    def test_dedup_and_sort(self):
        sft = Sft(Alphabet(2), 2, np.array([3, 0, 3, 0]))
        assert sft.forbidden_codes.tolist() == [0, 3]
        assert sft.num_forbidden == 2

    def test_readonly(self):
        sft = normalize(2, [(0, 0)])
        with pytest.raises(ValueError):
            sft.forbidden_codes[0] = 1

    def test_code_range_check(self):
        with pytest.raises(ValueError):
            Sft(Alphabet(2), 2, np.array([4]))

    def test_encode_limit(self):
        with pytest.raises(CapacityError):
            Sft(Alphabet(10), 63, np.array([], dtype=np.int64))

    def test_forbidden_mask_matches_scalar(self):
        sft = coloring_sft(GeneratorSet((1, 2)), 3)
        codes = np.arange(sft.code_space)
        mask = sft.forbidden_mask(codes)
        for c in codes:
            assert mask[c] == sft.is_forbidden_code(int(c))

    def test_digest_distinguishes(self):
        a = coloring_sft(GeneratorSet((1, 2)), 3)
        b = coloring_sft(GeneratorSet((1, 2)), 4)
        c = coloring_sft(GeneratorSet((1, 3)), 3)
        assert len({a.digest(), b.digest(), c.digest()}) == 3
        assert a.digest() == coloring_sft(GeneratorSet((1, 2)), 3).digest()


class TestIsAllowed:
    def test_examples(self):
        sft = normalize(2, [(0, 0), (1, 1)])
        assert is_allowed(sft, (0, 1, 0, 1))
        assert not is_allowed(sft, (0, 1, 1, 0))

    def test_coloring_word(self):
        sft = coloring_sft(GeneratorSet((1, 2)), 3)
        assert is_allowed(sft, (0, 1, 2, 0, 1, 2, 0))
        assert not is_allowed(sft, (0, 1, 0))

    def test_short_words_vacuous(self):
        sft = coloring_sft(GeneratorSet((1, 2)), 3)
        assert is_allowed(sft, ())
        assert is_allowed(sft, (0,))
        assert is_allowed(sft, (0, 0))

    def test_symbol_validation(self):
        sft = normalize(2, [(0, 0)])
        with pytest.raises(ValueError):
            is_allowed(sft, (0, 2))

    def test_matches_window_scan_oracle(self):
        rng = random.Random(11)
        sft = coloring_sft(GeneratorSet((1, 3)), 3)
        ell = sft.window_len
        forb = sft.forbidden_words()
        for _ in range(100):
            w = tuple(rng.randrange(3) for _ in range(rng.randint(0, 10)))
            oracle = not any(w[i : i + ell] in forb for i in range(len(w) - ell + 1))
            assert is_allowed(sft, w) == oracle


class TestTextFormat:
    def test_roundtrip(self):
        sft = coloring_sft(GeneratorSet((1, 3)), 3)
        again = parse_sft_text(sft_to_text(sft))
        assert again.digest() == sft.digest()

    def test_parse_with_comments_and_mixed_lengths(self):
        text = """
        # a test subshift
        alphabet 2
        0 0   # no double zeros
        1
        """
        sft = parse_sft_text(text)
        assert sft.window_len == 2
        assert sft.forbidden_words() == {(0, 0), (1, 0), (1, 1)}

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_sft_text("")
        with pytest.raises(ValueError):
            parse_sft_text("sizes 2\n0 0\n")
        with pytest.raises(ValueError):
            parse_sft_text("alphabet 2\n0 2\n")
