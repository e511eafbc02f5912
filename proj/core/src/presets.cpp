#include <array>

#include "meetlogic/logic.hpp"

namespace meet {

namespace {

constexpr std::string_view kPropositional = R"(
[signature]
neg 1
and 2
or 2
-> 2
iff 2

[rules]
K: / xi1 -> (xi2 -> xi1)
S: / (xi1 -> (xi2 -> xi3)) -> ((xi1 -> xi2) -> (xi1 -> xi3))
A1: / (xi1 and xi2) -> xi1
A2: / (xi1 and xi2) -> xi2
A3: / xi1 -> (xi2 -> (xi1 and xi2))
O1: / xi1 -> (xi1 or xi2)
O2: / xi2 -> (xi1 or xi2)
O3: / (xi1 -> xi3) -> ((xi2 -> xi3) -> ((xi1 or xi2) -> xi3))
N1: / (xi1 -> bot) -> neg xi1
N2: / neg xi1 -> (xi1 -> bot)
E1: / (xi1 iff xi2) -> (xi1 -> xi2)
E2: / (xi1 iff xi2) -> (xi2 -> xi1)
E3: / (xi1 -> xi2) -> ((xi2 -> xi1) -> (xi1 iff xi2))
T0: / top
T1: / topn.1(xi1)
T2: / topn.2(xi1, xi2)
F: / bot -> xi1
MP: xi1 ; xi1 -> xi2 / xi2
EF: bot / xi1

[profiles]
identity and position=1 fillers=_,top completion=2
identity -> position=2 fillers=top,_ completion=1
identity or position=1 fillers=_,bot completion=2
completion standard
)";

constexpr std::string_view kModal = R"(
[signature]
box 1
dia 1

[rules]
MK: / box(xi1 -> xi2) -> (box xi1 -> box xi2)
D1: / dia xi1 -> neg box neg xi1
D2: / neg box neg xi1 -> dia xi1
NEC: xi1 / box xi1
)";

constexpr std::string_view kCPL = R"(
[logic]
name = CPL
structurally_complete = true
characteristic = true

[rules]
DNE: / neg neg xi1 -> xi1

[generate]
boolean

[fixtures]
admissible DN: neg neg xi1 / xi1
nonadmissible SPLIT: xi1 or xi2 / xi1
)";

constexpr std::string_view kIPL = R"(
[logic]
name = IPL
verification = ipl

[generate]
heyting chain 2
heyting chain 3
heyting chain 4
heyting chain 5
heyting fork 2
heyting fork 3

[basis]
family visser

[fixtures]
admissible HARROP: neg xi1 -> (xi2 or xi3) / (neg xi1 -> xi2) or (neg xi1 -> xi3)
nonadmissible SPLIT: xi1 or xi2 / xi1
nonadmissible EM: / xi1 or neg xi1
)";

constexpr std::string_view kG3 = R"(
[logic]
name = G3
structurally_complete = true
characteristic = true

[rules]
LC: / (xi1 -> xi2) or (xi2 -> xi1)
BD2: / xi1 or (xi1 -> (xi2 or neg xi2))

[generate]
goedel 3

[fixtures]
admissible HARROP: neg xi1 -> (xi2 or xi3) / (neg xi1 -> xi2) or (neg xi1 -> xi3)
nonadmissible SPLIT: xi1 or xi2 / xi1
)";

constexpr std::string_view kS43 = R"(
[logic]
name = S43

[rules]
DNE: / neg neg xi1 -> xi1
MT: / box xi1 -> xi1
M4: / box xi1 -> box box xi1
M3: / box(box xi1 -> xi2) or box(box xi2 -> xi1)

[generate]
kripke S43 3

[basis]
R1: dia xi1 and dia neg xi1 / bot

[fixtures]
admissible R1: dia xi1 and dia neg xi1 / bot
nonadmissible REFL: box xi1 -> xi1 / xi1
)";

constexpr std::string_view kGL = R"(
[logic]
name = GL

[rules]
DNE: / neg neg xi1 -> xi1
LOB: / box(box xi1 -> xi1) -> box xi1

[generate]
kripke GL 3

[basis]
family gl

[fixtures]
admissible LOBR: box xi1 -> xi1 / xi1
nonadmissible WEAK: top / xi1
)";

struct Preset {
  std::string_view name;
  std::string_view own;
  bool modal;
};

constexpr std::array<Preset, 5> kPresets{{
    {"CPL", kCPL, false},
    {"G3", kG3, false},
    {"IPL", kIPL, false},
    {"S43", kS43, true},
    {"GL", kGL, true},
}};

const Preset& find_preset(std::string_view name) {
  for (const auto& p : kPresets)
    if (p.name == name) return p;
  throw Error("unknown preset '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : kPresets) out.emplace_back(p.name);
  return out;
}

std::string_view preset_definition(std::string_view name) {
  static std::map<std::string, std::string, std::less<>> texts;
  auto it = texts.find(name);
  if (it != texts.end()) return it->second;
  const Preset& p = find_preset(name);
  std::string text(p.own);
  text += kPropositional;
  if (p.modal) text += kModal;
  return texts.emplace(std::string(name), std::move(text)).first->second;
}

LogicBundle load_preset(std::string_view name, std::size_t basis_bound,
                        const std::optional<std::string>& tag_override) {
  return parse_logic_definition(preset_definition(name), basis_bound, tag_override);
}

}  // namespace meet
