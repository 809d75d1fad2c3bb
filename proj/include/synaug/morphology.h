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

#ifndef SYNAUG_MORPHOLOGY_H_
#define SYNAUG_MORPHOLOGY_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "synaug/treebank.h"

namespace synaug {

enum class Tense { kPresent, kPast };
enum class Number { kSingular, kPlural };

struct VerbEntry {
  std::string lemma;
  std::string present_3sg;
  std::string present_plural;
  std::string past;
  std::string past_participle;
};

class MorphologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedTagError : public MorphologyError {
 public:
  explicit UnsupportedTagError(const std::string& tag);
  const std::string tag;
};

class UnknownLemmaError : public MorphologyError {
 public:
  explicit UnknownLemmaError(const std::string& lemma);
  const std::string lemma;
};

// A surface verb form the lexicon has no entry for; the source sentence is
// skipped rather than guessed at.
class UnknownFormError : public MorphologyError {
 public:
  UnknownFormError(const std::string& form, const std::string& tag);
  const std::string form;
  const std::string tag;
};

// NP whose head-finding walk reaches no noun-tagged leaf.
class NoNominalHeadError : public MorphologyError {
 public:
  NoNominalHeadError();
};

// Immutable after load; shareable across threads. The reverse maps are
// tag-directed so that e.g. VBD "saw" resolves against past forms only.
class VerbLexicon {
 public:
  // TSV with five columns: lemma, 3sg, plural-present, past, participle.
  // UTF-8, no header. Comment lines starting with '#' are ignored.
  static VerbLexicon LoadTsv(const std::string& path);
  static VerbLexicon FromEntries(std::vector<VerbEntry> entries);

  const VerbEntry* Find(std::string_view lemma) const;
  // Reverse lookup directed by the POS tag (VBZ/VBP/VBD).
  std::optional<std::string> LemmaOfForm(std::string_view form,
                                         std::string_view tag) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, VerbEntry, std::less<>> entries_;
  std::map<std::string, std::string, std::less<>> third_sg_to_lemma_;
  std::map<std::string, std::string, std::less<>> plural_to_lemma_;
  std::map<std::string, std::string, std::less<>> past_to_lemma_;

  void Index();
};

struct TenseNumber {
  Tense tense;
  std::optional<Number> number;  // past forms do not mark number
};

// VBZ -> (present, singular); VBP -> (present, plural); VBD -> (past, ?).
// Non-finite tags (VB, VBG, VBN) raise UnsupportedTagError.
TenseNumber DetectTenseNumber(std::string_view verb_tag);

// Inflects a lemma for the given tense and number. Past forms ignore the
// number. be/have are excluded from transformations upstream; asking for
// them here is rejected defensively.
std::string Inflect(const VerbLexicon& lexicon, std::string_view lemma,
                    Tense tense, Number number);

std::string PastParticiple(const VerbLexicon& lexicon, std::string_view lemma);

// is / are / was / were.
std::string PassiveAux(Tense tense, Number number);

// Grammatical number of an NP subtree: a coordination (CC joining two or
// more nominals at the NP level) is plural; otherwise the number of the
// rightmost noun-tagged leaf of the immediate child layer, descending
// through nested NPs on the right spine.
Number NpNumber(const ConstituencyTree& np);

}  // namespace synaug

#endif  // SYNAUG_MORPHOLOGY_H_
