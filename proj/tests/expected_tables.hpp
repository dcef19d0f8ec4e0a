#pragma once
// Frozen reference tables.

#include <array>
#include <string_view>

namespace expected {

struct ClassRow {
  std::string_view name;
  int ord;
  int size;
  std::string_view minus;
};

inline constexpr std::array<ClassRow, 54> kGhatClasses = {{
    {"1×1", 1, 1, "2×2"},
    {"1×3+3×1", 3, 40, "2×6+6×2"},
    {"3×3", 3, 400, "6×6"},
    {"1×4+4×1", 4, 60, "2×4+4×2"},
    {"1×5A+5B×1", 5, 24, "2×10B+10A×2"},
    {"1×5B+5A×1", 5, 24, "2×10A+10B×2"},
    {"5A×5B", 5, 144, "10B×10A"},
    {"5B×5A", 5, 144, "10A×10B"},
    {"5A×5A+5B×5B", 5, 288, "10A×10A+10B×10B"},
    {"1×6+6×1", 6, 40, "2×3+3×2"},
    {"1×10A+10B×1", 10, 24, "2×5B+5A×2"},
    {"1×10B+10A×1", 10, 24, "2×5A+5B×2"},
    {"5A×10B+10A×5B", 10, 288, "5B×10A+10B×5A"},
    {"3×4+4×3", 12, 1200, "4×6+6×4"},
    {"3×5A+5B×3", 15, 480, "6×10B+10A×6"},
    {"3×5B+5A×3", 15, 480, "6×10A+10B×6"},
    {"4×5A+5B×4", 20, 720, "4×10B+10A×4"},
    {"4×5B+5A×4", 20, 720, "4×10A+10B×4"},
    {"3×10A+10B×3", 30, 480, "5A×6+6×5B"},
    {"3×10B+10A×3", 30, 480, "5B×6+6×5A"},
    {"2×2", 2, 1, "1×1"},
    {"2×6+6×2", 6, 40, "1×3+3×1"},
    {"6×6", 6, 400, "3×3"},
    {"2×4+4×2", 4, 60, "1×4+4×1"},
    {"2×10B+10A×2", 10, 24, "1×5A+5B×1"},
    {"2×10A+10B×2", 10, 24, "1×5B+5A×1"},
    {"10B×10A", 10, 144, "5A×5B"},
    {"10A×10B", 10, 144, "5B×5A"},
    {"10A×10A+10B×10B", 10, 288, "5A×5A+5B×5B"},
    {"2×3+3×2", 6, 40, "1×6+6×1"},
    {"2×5B+5A×2", 10, 24, "1×10A+10B×1"},
    {"2×5A+5B×2", 10, 24, "1×10B+10A×1"},
    {"5B×10A+10B×5A", 10, 288, "5A×10B+10A×5B"},
    {"4×6+6×4", 12, 1200, "3×4+4×3"},
    {"6×10B+10A×6", 30, 480, "3×5A+5B×3"},
    {"6×10A+10B×6", 30, 480, "3×5B+5A×3"},
    {"4×10B+10A×4", 20, 720, "4×5A+5B×4"},
    {"4×10A+10B×4", 20, 720, "4×5B+5A×4"},
    {"5A×6+6×5B", 30, 480, "3×10A+10B×3"},
    {"5B×6+6×5A", 30, 480, "3×10B+10A×3"},
    {"1×2+2×1", 2, 2, "1×2+2×1"},
    {"[1×2]", 2, 120, "[1×2]"},
    {"[1×1]", 4, 120, "[1×1]"},
    {"4×4", 4, 900, "4×4"},
    {"3×6+6×3", 6, 800, "3×6+6×3"},
    {"[1×6]", 6, 2400, "[1×6]"},
    {"[1×4]", 8, 3600, "[1×4]"},
    {"5A×10A+10B×5B", 10, 288, "5A×10A+10B×5B"},
    {"5B×10B+10A×5A", 10, 288, "5B×10B+10A×5A"},
    {"[1×10A]", 10, 1440, "[1×10A]"},
    {"[1×10B]", 10, 1440, "[1×10B]"},
    {"[1×3]", 12, 2400, "[1×3]"},
    {"[1×5A]", 20, 1440, "[1×5A]"},
    {"[1×5B]", 20, 1440, "[1×5B]"},
}};

struct IrrepRow {
  std::string_view name;
  int dim;
  bool spinorial;
};

inline constexpr std::array<IrrepRow, 54> kGhatIrreps = {{
    {"(1⊗2)⊕(2′⊗1)", 4, true},
    {"(1⊗2′)⊕(2⊗1)", 4, true},
    {"(1⊗4′)⊕(4′⊗1)", 8, true},
    {"(1⊗6)⊕(6⊗1)", 12, true},
    {"(2⊗3)⊕(3′⊗2′)", 12, true},
    {"(2⊗3′)⊕(3⊗2′)", 12, true},
    {"(2′⊗3)⊕(3′⊗2)", 12, true},
    {"(2′⊗3′)⊕(3⊗2)", 12, true},
    {"(2⊗4)⊕(4⊗2′)", 16, true},
    {"(2′⊗4)⊕(4⊗2)", 16, true},
    {"(2⊗5)⊕(5⊗2′)", 20, true},
    {"(2′⊗5)⊕(5⊗2)", 20, true},
    {"(3⊗4′)⊕(4′⊗3′)", 24, true},
    {"(3′⊗4′)⊕(4′⊗3)", 24, true},
    {"(4⊗4′)⊕(4′⊗4)", 32, true},
    {"(3⊗6)⊕(6⊗3′)", 36, true},
    {"(3′⊗6)⊕(6⊗3)", 36, true},
    {"(4′⊗5)⊕(5⊗4′)", 40, true},
    {"(4⊗6)⊕(6⊗4)", 48, true},
    {"(5⊗6)⊕(6⊗5)", 60, true},
    {"1⊗1", 1, false},
    {"−(1⊗1)", 1, false},
    {"2⊗2′", 4, false},
    {"−(2⊗2′)", 4, false},
    {"2′⊗2", 4, false},
    {"−(2′⊗2)", 4, false},
    {"(1⊗3)⊕(3′⊗1)", 6, false},
    {"(1⊗3′)⊕(3⊗1)", 6, false},
    {"(1⊗4)⊕(4⊗1)", 8, false},
    {"(2⊗2)⊕(2′⊗2′)", 8, false},
    {"3⊗3′", 9, false},
    {"−(3⊗3′)", 9, false},
    {"3′⊗3", 9, false},
    {"−(3′⊗3)", 9, false},
    {"(1⊗5)⊕(5⊗1)", 10, false},
    {"(2⊗4′)⊕(4′⊗2′)", 16, false},
    {"(2′⊗4′)⊕(4′⊗2)", 16, false},
    {"4⊗4", 16, false},
    {"−(4⊗4)", 16, false},
    {"4′⊗4′", 16, false},
    {"−(4′⊗4′)", 16, false},
    {"(3⊗3)⊕(3′⊗3′)", 18, false},
    {"(2⊗6)⊕(6⊗2′)", 24, false},
    {"(2′⊗6)⊕(6⊗2)", 24, false},
    {"(3⊗4)⊕(4⊗3′)", 24, false},
    {"(3′⊗4)⊕(4⊗3)", 24, false},
    {"5⊗5", 25, false},
    {"−(5⊗5)", 25, false},
    {"(3⊗5)⊕(5⊗3′)", 30, false},
    {"(3′⊗5)⊕(5⊗3)", 30, false},
    {"6⊗6", 36, false},
    {"−(6⊗6)", 36, false},
    {"(4⊗5)⊕(5⊗4)", 40, false},
    {"(4′⊗6)⊕(6⊗4′)", 48, false},
}};

}  // namespace expected
