//
// Copyright 2026 The Synaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef SYNAUG_CLAUSE_EXTRACTOR_H_
#define SYNAUG_CLAUSE_EXTRACTOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synaug/morphology.h"
#include "synaug/treebank.h"

namespace synaug {

// A matrix transitive clause: NP subject, finite verb, NP object, plus any
// VP material after the object (adjuncts are carried along, never dropped)
// and the sentence-final punctuation token.
struct TransitiveClause {
  ConstituencyTree subject;
  std::string verb_token;
  std::string verb_tag;  // VBZ, VBP or VBD
  std::string verb_lemma;
  Tense tense = Tense::kPresent;
  ConstituencyTree object;
  std::vector<std::string> vp_rest;  // tokens after the object inside the VP
  std::string trailing_punct;        // "" when the sentence has none
  std::vector<std::string> source_tokens;
};

// Why a sentence yielded no clause; used for skip accounting.
enum class ClauseReject {
  kNone,
  kStructure,       // no matrix S, no NP+VP shape, or extra S-level material
  kNonFiniteVerb,   // VP not headed by a VBZ/VBP/VBD leaf (modals, VBG, ...)
  kObjectCount,     // zero or more than one NP daughter of the VP
  kPronoun,         // subject or object is (headed by) a personal pronoun
  kBeHave,          // verb lemma is be or have
  kUnknownVerbForm, // verb form missing from the lexicon
  kNoNominalHead,   // subject or object has no noun-tagged head
};

std::string_view ClauseRejectName(ClauseReject reject);

// Maps a verb surface form to its lemma using the tag-directed reverse
// lexicon. Throws UnknownFormError when the form is not covered.
std::string LemmatizeVerb(std::string_view verb_token,
                          std::string_view verb_tag,
                          const VerbLexicon& lexicon);

// Returns the clause of a full sentence parse, or nullopt when any of the
// selection constraints fails: the matrix S must consist of an NP subject
// followed by a VP (plus optional final punctuation); the VP must be headed
// by a finite verb with exactly one NP daughter directly after it; subject
// and object must be full noun phrases (not personal pronouns) with
// detectable number; and the verb lemma must not be be/have or unknown.
// Absence is a value, not an error.
std::optional<TransitiveClause> FindTransitiveClause(
    const ConstituencyTree& tree, const VerbLexicon& lexicon,
    ClauseReject* reject_reason = nullptr);

}  // namespace synaug

#endif  // SYNAUG_CLAUSE_EXTRACTOR_H_
