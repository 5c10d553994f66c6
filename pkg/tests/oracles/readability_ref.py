# Independent readability reference used to freeze FKGL fixtures and to
# cross-check the package's counters. Same counting rules, but written as
# explicit character loops over its own word/sentence extraction rather
# than sharing any code with the package.
import re

_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:[-'’][A-Za-z0-9]+)*")
_VOWELS = set("aeiouy")


def words(text):
    return _WORD_RE.findall(text)


def sentences(text):
    parts = re.split(r"[.!?]+(?:[\"'”’)\]]*)(?=\s|$)", text)
    return [p for p in parts if p.strip()]


def syllables(word):
    w = "".join(ch for ch in word.lower() if "a" <= ch <= "z")
    if not w:
        return 1
    count = 0
    previous_vowel = False
    for ch in w:
        is_vowel = ch in _VOWELS
        if is_vowel and not previous_vowel:
            count += 1
        previous_vowel = is_vowel
    if count > 1:
        if w.endswith("e"):
            consonant_le = len(w) >= 3 and w[-2:] == "le" and w[-3] not in _VOWELS
            if not consonant_le:
                count -= 1
        elif w.endswith("ed") and len(w) > 2 and w[-3] not in _VOWELS | set("td"):
            count -= 1
        elif w.endswith("es") and len(w) > 2 and w[-3] not in _VOWELS | set("sxzhl"):
            count -= 1
    count = max(1, count)
    return min(count, len(w))


def fkgl(text):
    ws = words(text)
    ss = sentences(text)
    n_words = len(ws)
    n_sents = max(1, len(ss))
    n_sylls = sum(syllables(w) for w in ws)
    if n_words == 0:
        raise ValueError("no words")
    return 0.39 * n_words / n_sents + 11.8 * n_sylls / n_words - 15.59
