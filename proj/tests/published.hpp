#pragma once

// Starter vectors and C1 blocks (k rows) over {0,1,*} for g = 3.

#include <optional>
#include <string>
#include <vector>

namespace published {

inline const std::vector<std::string> kC1_21 = {
    "*0110***1",
    "*11*00010",
    "01*1101*0",
    "0*0010000",
    "10000*1*0",
    "*00*0***1",
    "***100010",
    "01*1*0110",
    "001010000",
    "10001*1*0",
    "****001*0",
    "*1*101***",
    "0110*1*10",
    "0*10**000",
    "000*1*100",
    "*001*000*",
    "*10001110",
    "111100100",
    "0**0101*1",
    "0*****100",
    "*001*0**1",
};

inline const std::vector<std::string> kC1_22 = {
    "0*10**0",
    "***1000",
    "*0110*0",
    "00*1*1*",
    "0000*1*",
    "0**0111",
    "**01000",
    "**11110",
    "*0*****",
    "001001*",
    "0***0**",
    "0*11*00",
    "***1*0*",
    "*010*10",
    "00*0011",
    "0001010",
    "0*01101",
    "**00*00",
    "**10010",
    "*0**010",
    "00111*1",
    "0*0**0*",
};

inline const std::vector<std::string> kC1_27 = {
    "0000",
    "11**",
    "0000",
    "11*0",
    "0000",
    "11*0",
    "1000",
    "01*0",
    "1000",
    "01*0",
    "1000",
    "01*1",
    "1000",
    "01*0",
    "1000",
    "01*0",
    "1100",
    "00*0",
    "1100",
    "00*0",
    "1100",
    "00*0",
    "1100",
    "00*0",
    "11**",
    "0000",
    "11*0",
};

inline const std::vector<std::string> kC1_28 = {
    "**10",
    "000*",
    "*0*0",
    "010*",
    "00*0",
    "*1*0",
    "0*00",
    "00*0",
    "****",
    "0110",
    "*0*1",
    "**10",
    "0*01",
    "*000",
    "*10*",
    "0010",
    "*0*1",
    "0*10",
    "000*",
    "***0",
    "0110",
    "00*1",
    "*110",
    "0*00",
    "*0*0",
    "*100",
    "0110",
    "*010",
};


// Orb 1..14 for PGL(2,2), as printed with the projective line {0,1,*}.
inline const char* const kOrbitListing[] = {
    "0000 **** 1111",
    "0001 000* ***0 ***1 1110 111*",
    "1*** 1000 0111 *000 0*** *111",
    "0100 *0** 0*00 *1** 1011 1*11",
    "11*1 **1* 0010 1101 00*0 **0*",
    "11** **11 0011 1100 00** **00",
    "*0*0 0101 *1*1 0*0* 1010 1*1*",
    "*11* 1**1 1001 0110 *00* 0**0",
    "11*0 **10 001* 110* 00*1 **01",
    "*0*1 010* *1*0 0*01 101* 1*10",
    "1*01 0*10 *10* 01*0 *01* 10*1",
    "1*0* 0*1* *101 01*1 *010 10*0",
    "1*00 0*11 *100 01** *011 10**",
    "1**0 100* 011* *001 0**1 *110",
};

struct Starter {
  int k;
  const char* u;
  const char* v;
  const std::vector<std::string>* c1;
};

inline const std::vector<Starter> kTable2 = {
    {21, "00001010*1**10**001*1", "0000100*00*10001*111*", &kC1_21},
    {22, "0000011*0*0110*1***01*", "00010010*1**0*01*10**1", &kC1_22},
    {27, "1101011***0*00**1*011*0100*", "11*0*1011***0*0*01*00001***", &kC1_27},
    {28, "1**00**1*01101111*0*0101***1", "*1011*110*000*1**10**0*00*01", &kC1_28},
    {30, "011*11***001***1*10**0*1100*01", "11**01101000*101*1*0*000010***", nullptr},
    {32, "*1100010*111*1*010**0100**0**010", "*000*1**0*000110**100*0*11*11111", nullptr},
    {34, "00*101***1001*010**0*0*01**0*11111", "1100*1*01*10110**0**011*101001*000", nullptr},
    {35, "01*0**1000*01**0*1*111***01*01000*1", "0*00111*0*110*11*110*010010000*1**0", nullptr},
};

struct CoverageRow {
  int g;
  int k;
  int n;
  double mu;
  const char* u;
};

inline const std::vector<CoverageRow> kCoverageSpotChecks = {
    {3, 16, 99, 0.828, "00001001**011*1*"},
    {3, 21, 129, 0.906, "00001010*1**10**001*1"},
    {4, 18, 436, 0.851, "00010021***21020*2"},
    {5, 21, 1265, 0.834, "110131300*30010**3203"},
    {6, 25, 3006, 0.811, "000403014003033404320*1**"},
};

}  // namespace published
