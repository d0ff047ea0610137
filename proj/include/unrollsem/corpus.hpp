#ifndef UNROLLSEM_CORPUS_HPP
#define UNROLLSEM_CORPUS_HPP

#include <vector>

namespace unrollsem {

// Small loop programs exercising every loop shape the library handles:
// deterministic and nondeterministic bodies, nested loops, always-true
// exits, never-saturating bodies, repeat-until, labelled steps. The same
// programs ship as .prog files in corpus/.
struct CorpusEntry {
    const char* name;
    const char* source;
};

const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace unrollsem

#endif
