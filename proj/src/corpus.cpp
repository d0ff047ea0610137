#include "unrollsem/corpus.hpp"

namespace unrollsem {

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"countdown",
         "var x: 0..3;\n"
         "until x = 0 loop x := x - 1 end\n"},
        {"countdown_nondet",
         "var x: 0..3;\n"
         "until x = 0 loop (x := x - 1 | x := 0) end\n"},
        {"nested_loops",
         "var x: 0..2;\n"
         "var y: 0..2;\n"
         "until x = 0 loop until y = 0 loop y := y - 1 end; x := x - 1 end\n"},
        {"always_true_exit",
         "var x: 0..2;\n"
         "until True loop x := x + 1 end\n"},
        {"never_saturating",
         "var x: 0..1;\n"
         "until x = 0 loop skip end\n"},
        {"two_counters",
         "var x: 0..2;\n"
         "var y: 0..2;\n"
         "until x = 0 and y = 0 loop (x := x - 1 | y := y - 1) end\n"},
        {"count_up",
         "var x: 0..4;\n"
         "until x >= 3 loop x := x + 1 end\n"},
        {"even_steps",
         "var x: 0..5;\n"
         "until x = 0 loop x := x - 2 end\n"},
        {"guarded_choice",
         "var x: 0..3;\n"
         "until x <= 0 loop if x > 1 then x := x - 2 else x := x - 1 end end\n"},
        {"repeat_countdown",
         "var x: 0..3;\n"
         "repeat x := x - 1 until x = 0\n"},
        {"labeled_reset",
         "var x: 0..2;\n"
         "until x = 0 loop dec: x := x - 1 end\n"},
        {"stutter_exit",
         "var x: 0..2;\n"
         "until x = 1 loop x := x * 1 end\n"},
    };
    return corpus;
}

}  // namespace unrollsem
