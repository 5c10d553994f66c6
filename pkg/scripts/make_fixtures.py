#!/usr/bin/env python3
"""Regenerate frozen test fixtures from the reference oracles.

FKGL expectations come from tests/oracles/readability_ref.py; SARI
expectations come from tests/oracles/sari_ref.py run on the package
tokenizer's output. Fixtures are committed; rerun only when the pinned
conventions deliberately change.
"""
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "src"))

from oracles import readability_ref, sari_ref  # noqa: E402
from levelforge.textcore import tokenize  # noqa: E402

FIXTURES = ROOT / "tests" / "fixtures"

FKGL_SENTENCES = [
    "The cat sat on the mat.",
    "I am here.",
    "Dogs bark loudly at night.",
    "She walked to the market and bought fresh bread.",
    "The weather today is surprisingly warm for the season.",
    "Birds fly south when winter approaches.",
    "He finished his homework before dinner.",
    "The children played in the garden all afternoon.",
    "Rain fell steadily throughout the morning.",
    "Our teacher explained the lesson very clearly.",
    "The old bridge crosses a narrow river.",
    "They planted tomatoes and peppers in the spring.",
    "A gentle breeze moved through the tall grass.",
    "The train arrived exactly on time.",
    "My brother collects stamps from many countries.",
    "The library closes at nine in the evening.",
    "Fresh snow covered the mountain peaks.",
    "She sings beautifully in the school choir.",
    "The baker starts work before sunrise every day.",
    "Waves crashed against the rocky shore.",
    "The museum displays paintings from several centuries.",
    "He repaired the broken fence over the weekend.",
    "Students gathered in the hall for the assembly.",
    "The recipe requires butter and three eggs.",
    "Autumn leaves drifted across the empty road.",
    "The committee reviewed the proposal carefully before voting.",
    "Scientists continue to study the effects of climate change on coastal regions.",
    "The ancient manuscript was discovered in a monastery library.",
    "Economic conditions improved gradually during the second quarter.",
    "The orchestra performed a symphony by a famous composer.",
    "Engineers designed a more efficient cooling system for the building.",
    "The documentary examines the history of space exploration.",
    "Negotiations between the two companies lasted several months.",
    "The professor published an influential paper on molecular biology.",
    "Volunteers distributed food and blankets to the flood victims.",
    "The investigation revealed significant problems with the original design.",
    "Photosynthesis converts sunlight into chemical energy.",
    "The administration announced new policies regarding public transportation.",
    "Archaeologists uncovered artifacts from an ancient civilization.",
    "The conference attracted researchers from around the world.",
    "Technological innovation drives productivity growth in modern economies.",
    "The legislation requires manufacturers to reduce harmful emissions.",
    "Her dissertation analyzes patterns of migration in the nineteenth century.",
    "The hospital implemented a comprehensive electronic records system.",
    "International cooperation remains essential for environmental protection.",
    "The algorithm processes millions of transactions every second.",
    "Philosophers have debated the nature of consciousness for centuries.",
    "The corporation restructured its operations to improve efficiency.",
    "Meteorologists predicted severe thunderstorms for the afternoon.",
    "The university established a scholarship fund for local students.",
    "Go now.",
    "Stop right there!",
    "Why did you leave so early?",
    "What a wonderful surprise this is!",
    "Can you help me carry these boxes upstairs?",
    "The sun rose. The birds sang. The day began.",
    "He knocked twice. Nobody answered.",
    "First we measured the room. Then we ordered the carpet.",
    "The match ended in a draw. Both teams played well.",
    "She opened the letter. Her hands trembled slightly.",
    "It rained all day. We stayed inside and read books.",
    "The phone rang three times. Then it stopped suddenly.",
    "Is this the right address? I think we are lost.",
    "Look at that sunset! The sky is full of color.",
    "The experiment failed twice. The third attempt succeeded.",
    "Water boils at one hundred degrees.",
    "The moon orbits the earth once every month.",
    "Honey never spoils if stored properly.",
    "Octopuses have three hearts and blue blood.",
    "Lightning strikes the earth about eight million times per day.",
    "A single cloud can weigh more than a million pounds.",
    "The human body contains trillions of cells.",
    "Sound travels faster through water than through air.",
    "Some trees communicate through underground networks.",
    "The heart pumps blood through sixty thousand miles of vessels.",
    "My grandmother's recipes are written in a worn notebook.",
    "The state-of-the-art laboratory opened last week.",
    "He couldn't find his well-worn hiking boots.",
    "The twenty-first century brought rapid technological change.",
    "Her mother-in-law arrived with homemade cookies.",
    "The self-driving car navigated the intersection smoothly.",
    "They don't understand the long-term consequences.",
    "It's a once-in-a-lifetime opportunity for young athletes.",
    "The world-famous chef prepared a seven-course dinner.",
    "We shouldn't ignore these warning signs.",
    "The quick brown fox jumps over the lazy dog.",
    "Pack my box with five dozen liquor jugs.",
    "A journey of a thousand miles begins with a single step.",
    "Practice makes perfect when learning a new language.",
    "The early bird catches the worm.",
    "Actions speak louder than words.",
    "Every cloud has a silver lining.",
    "Knowledge is power in the information age.",
    "Fortune favors the bold and the prepared.",
    "Time heals almost every wound.",
    "The squeaky wheel gets the grease.",
    "Curiosity opened the door to discovery.",
    "Patience is a virtue rarely practiced.",
    "Honesty remains the best policy.",
    "Experience is the greatest teacher of all.",
]

# (source, output, references) triples spanning identity, deletion-only,
# addition-only, reordering, multi-reference, and degenerate repetition.
SARI_TRIPLES = [
    ("About 95 species are currently accepted.",
     "About 95 species are currently known.",
     ["About 95 species are currently known.",
      "About 95 species are now accepted.",
      "95 species are now accepted."]),
    ("The cat sat on the mat.",
     "The cat sat on the mat.",
     ["The cat sat on the mat."]),
    ("The cat sat on the mat.",
     "The cat sat.",
     ["The cat sat.", "A cat sat."]),
    ("He went home.",
     "He went home quickly.",
     ["He went home quickly.", "He quickly went home."]),
    ("The committee reviewed the proposal carefully before voting.",
     "The committee looked at the plan before voting.",
     ["The committee looked at the plan before voting.",
      "The group reviewed the plan before the vote."]),
    ("The weather is nice today.",
     "",
     ["The weather is nice."]),
    ("She bought fresh bread at the market.",
     "bread bread bread bread bread",
     ["She bought bread at the market."]),
    ("The state capital is Aracaju.",
     "the capital of the state is the capital of the state of the state of",
     ["The state capital is Aracaju.",
      "Aracaju is the state capital."]),
    ("Dogs bark loudly at night.",
     "Dogs bark at night.",
     ["Dogs bark at night."]),
    ("The old bridge crosses a narrow river.",
     "The bridge crosses a river.",
     ["The bridge crosses a river.",
      "The old bridge goes over a narrow river.",
      "A bridge crosses the river."]),
    ("Scientists study climate change.",
     "Scientists research climate change effects.",
     ["Scientists research the effects of climate change."]),
    ("The train arrived exactly on time.",
     "The train was late.",
     ["The train arrived on time.", "The train came on time."]),
    ("Economic conditions improved during the quarter.",
     "Things got better.",
     ["The economy got better during the quarter.",
      "Economic conditions got better."]),
    ("He finished his homework before dinner.",
     "Before dinner he finished his homework.",
     ["He finished his homework before dinner."]),
    ("The recipe requires butter and three eggs.",
     "The recipe needs butter and eggs.",
     ["The recipe needs butter and three eggs.",
      "You need butter and three eggs."]),
    ("Rain fell steadily throughout the morning.",
     "It rained all morning.",
     ["It rained all morning.", "Rain fell all morning long."]),
    ("The museum displays paintings from several centuries.",
     "The museum shows old paintings.",
     ["The museum shows paintings from many centuries.",
      "The museum displays old paintings."]),
    ("Volunteers distributed food to the flood victims.",
     "Volunteers gave food to flood victims and helped rebuild houses.",
     ["Volunteers gave food to the flood victims."]),
    ("Waves crashed against the rocky shore.",
     "waves waves crashed crashed against against the the rocky rocky shore shore",
     ["Waves hit the rocky shore."]),
    ("The library closes at nine in the evening.",
     "The library closes at nine.",
     ["The library closes at nine.",
      "The library shuts at nine in the evening.",
      "It closes at nine at night."]),
]


def tok(text):
    return " ".join(t.lower() for t in tokenize(text))


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)

    with open(FIXTURES / "fkgl_sentences.jsonl", "w", encoding="utf-8") as fh:
        for text in FKGL_SENTENCES:
            row = {
                "text": text,
                "fkgl": readability_ref.fkgl(text),
                "word_count": len(readability_ref.words(text)),
                "sentence_count": max(1, len(readability_ref.sentences(text))),
                "syllable_count": sum(
                    readability_ref.syllables(w) for w in readability_ref.words(text)
                ),
            }
            fh.write(json.dumps(row, sort_keys=True) + "\n")

    with open(FIXTURES / "sari_triples.jsonl", "w", encoding="utf-8") as fh:
        for source, output, references in SARI_TRIPLES:
            expected = sari_ref.SARIsent(
                tok(source), tok(output), [tok(r) for r in references]
            )
            row = {
                "source": source,
                "output": output,
                "references": references,
                "sari": expected,
            }
            fh.write(json.dumps(row, sort_keys=True) + "\n")

    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
