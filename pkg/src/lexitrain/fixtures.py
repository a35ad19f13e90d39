"""Bundled fixture packs.

Two packs ship with the package: a canonical Korean pack that carries the
full curriculum track list (alphabet and numbering at Basic; pronouns,
interrogatives, school supplies, sports, and time reading at Intermediate;
situational phrases at Advanced), and a minimal Spanish pack that is the
smallest document the schema accepts. Both are deterministic, so tests and
the bundled docs can rely on their exact contents.
"""

from __future__ import annotations

from .lexicon import Category, Language, Level, LevelRank, LexiconPack, TrainingItem


def _item(
    item_id: str,
    english: str,
    translation: str,
    romanization: str | None = None,
    mnemonic: str | None = None,
    sample: str | None = None,
    audio: str | None = None,
) -> TrainingItem:
    return TrainingItem(
        item_id=item_id,
        english=english,
        translation=translation,
        romanization=romanization,
        mnemonic=mnemonic,
        sample_sentence=sample,
        audio=audio,
    )


def _cat(name: str, items: list[TrainingItem]) -> Category:
    return Category(name=name, items=tuple(items))


_KO_ALPHABET = [
    _item("ko-alpha-giyeok", "the letter g/k", "ㄱ", "giyeok",
          "A bent garden hose spraying a K of water.", None, "audio/alphabet/giyeok.mp3"),
    _item("ko-alpha-nieun", "the letter n", "ㄴ", "nieun",
          "A nook in the corner of a room, shaped like an L lying down.", None,
          "audio/alphabet/nieun.mp3"),
    _item("ko-alpha-digeut", "the letter d/t", "ㄷ", "digeut",
          "A desk drawer seen from the side.", None, "audio/alphabet/digeut.mp3"),
    _item("ko-alpha-rieul", "the letter r/l", "ㄹ", "rieul",
          "A winding river switching back on itself.", None, "audio/alphabet/rieul.mp3"),
    _item("ko-alpha-mieum", "the letter m", "ㅁ", "mieum",
          "A mouth wide open in a square yawn.", None, "audio/alphabet/mieum.mp3"),
    _item("ko-alpha-bieup", "the letter b/p", "ㅂ", "bieup",
          "A bucket with two handles sticking up.", None, "audio/alphabet/bieup.mp3"),
    _item("ko-alpha-siot", "the letter s", "ㅅ", "siot",
          "A snowy mountain peak.", None, "audio/alphabet/siot.mp3"),
    _item("ko-alpha-ieung", "the silent/ng letter", "ㅇ", "ieung",
          "A ring that makes no sound until it lands: -ng.", None,
          "audio/alphabet/ieung.mp3"),
]

_KO_NUMBERING = [
    _item("ko-num-1", "one", "하나", "hana", "HAN-nah holds up one hand.",
          "사과 하나 주세요.", "audio/numbering/hana.mp3"),
    _item("ko-num-2", "two", "둘", "dul", "A duo makes two.", None,
          "audio/numbering/dul.mp3"),
    _item("ko-num-3", "three", "셋", "set", "A set of three matching cups.", None,
          "audio/numbering/set.mp3"),
    _item("ko-num-4", "four", "넷", "net", "A net with four corners.", None,
          "audio/numbering/net.mp3"),
    _item("ko-num-5", "five", "다섯", "daseot", "DA-seot: a high five lands with a da!",
          None, "audio/numbering/daseot.mp3"),
    _item("ko-num-6", "six", "여섯", "yeoseot", "Yo! Six-pack.", None,
          "audio/numbering/yeoseot.mp3"),
    _item("ko-num-7", "seven", "일곱", "ilgop", "Ill at seven, gulp the medicine.", None,
          "audio/numbering/ilgop.mp3"),
    _item("ko-num-8", "eight", "여덟", "yeodeol", "Yo, a dull plate of eight dumplings.",
          None, "audio/numbering/yeodeol.mp3"),
]

_KO_PRONOUNS = [
    _item("ko-pro-i", "I / me", "나", "na", "NAh, that's me."),
    _item("ko-pro-you", "you", "너", "neo", "NEO, the chosen you."),
    _item("ko-pro-we", "we", "우리", "uri", "OO-ree: our tree, our family."),
    _item("ko-pro-he", "he", "그", "geu", "That GUy over there."),
    _item("ko-pro-she", "she", "그녀", "geunyeo", "That guy's... no, HER: geu-NYEO."),
    _item("ko-pro-they", "they", "그들", "geudeul", "Geu plus deul makes a crowd of them."),
    _item("ko-pro-this", "this", "이것", "igeot", "EE! Got this."),
    _item("ko-pro-that", "that", "저것", "jeogeot", "JEO points over there at that."),
]

_KO_INTERROGATIVES = [
    _item("ko-int-who", "who", "누구", "nugu", "NEW GOO on the floor, who did it?"),
    _item("ko-int-what", "what", "무엇", "mueot", "MOO? What did the cow say?"),
    _item("ko-int-where", "where", "어디", "eodi", "Oh DEE, where are you?"),
    _item("ko-int-when", "when", "언제", "eonje", "UN-jay asks when the play starts."),
    _item("ko-int-why", "why", "왜", "wae", "WAE sounds like 'why' said sideways."),
    _item("ko-int-how", "how", "어떻게", "eotteoke", "Oh, TOK-keh? How do you do that?"),
    _item("ko-int-which", "which", "어느", "eoneu", "UH, new one? Which one?"),
    _item("ko-int-howmuch", "how much", "얼마", "eolma", "'EOL-ma?' asks grandma at the market."),
]

_KO_SCHOOL = [
    _item("ko-sch-pencil", "pencil", "연필", "yeonpil", "YEON fills the page with pencil lines."),
    _item("ko-sch-book", "book", "책", "chaek", "CHECK the book out of the library."),
    _item("ko-sch-notebook", "notebook", "공책", "gongchaek", "A gong rings: check your notebook."),
    _item("ko-sch-eraser", "eraser", "지우개", "jiugae", "JEE-oo! Gone. The eraser wiped it."),
    _item("ko-sch-bag", "bag", "가방", "gabang", "Grab the bag and go: ga-BANG."),
    _item("ko-sch-chair", "chair", "의자", "uija", "We JAh-st sat on the chair."),
    _item("ko-sch-desk", "desk", "책상", "chaeksang", "Book (chaek) on a stand (sang): a desk."),
    _item("ko-sch-pen", "pen", "펜", "pen", "Same word, new alphabet: pen."),
]

_KO_SPORTS = [
    _item("ko-spo-soccer", "soccer", "축구", "chukgu", "CHook the ball into the GOO-al."),
    _item("ko-spo-baseball", "baseball", "야구", "yagu", "YA! GOO! The crowd cheers a home run."),
    _item("ko-spo-basketball", "basketball", "농구", "nonggu", "No-on GOO: nothing but net."),
    _item("ko-spo-swimming", "swimming", "수영", "suyeong", "SOO-young swims every morning."),
    _item("ko-spo-tennis", "tennis", "테니스", "teniseu", "Tennis with a Korean accent."),
    _item("ko-spo-volleyball", "volleyball", "배구", "baegu", "BAE sets, GOO spikes."),
    _item("ko-spo-running", "running", "달리기", "dalligi", "DAL-lee! Ghee! Run for it."),
    _item("ko-spo-golf", "golf", "골프", "golpeu", "Golf, pronounced gol-peu."),
]

_KO_TIME = [
    _item("ko-time-1", "one o'clock", "한 시", "han si", "HAN see the clock strike one.",
          "지금 한 시예요."),
    _item("ko-time-2", "two o'clock", "두 시", "du si", "DOO see? Two hands at two."),
    _item("ko-time-3", "three o'clock", "세 시", "se si", "SAY see, three."),
    _item("ko-time-4", "four o'clock", "네 시", "ne si", "NEH see, four."),
    _item("ko-time-5", "five o'clock", "다섯 시", "daseot si", "Daseot (five) plus si (hour)."),
    _item("ko-time-6", "six o'clock", "여섯 시", "yeoseot si", "Yeoseot (six) plus si (hour)."),
    _item("ko-time-7", "seven o'clock", "일곱 시", "ilgop si", "Ilgop (seven) plus si (hour)."),
    _item("ko-time-8", "eight o'clock", "여덟 시", "yeodeol si", "Yeodeol (eight) plus si (hour)."),
]

_KO_GREETINGS = [
    _item("ko-gre-hello", "hello", "안녕하세요", "annyeonghaseyo",
          "AN-young HASTE-yo: a young greeter in haste.", "안녕하세요, 만나서 반갑습니다.",
          "audio/greetings/annyeonghaseyo.mp3"),
    _item("ko-gre-goodbye", "goodbye (to someone leaving)", "안녕히 가세요", "annyeonghi gaseyo",
          "An-young-hee, GO safely (gaseyo).", None, "audio/greetings/annyeonghi-gaseyo.mp3"),
    _item("ko-gre-goodmorning", "good morning", "좋은 아침입니다", "joeun achimimnida",
          "JO's morning achoo: achim is morning.", None, "audio/greetings/joeun-achim.mp3"),
    _item("ko-gre-goodnight", "good night", "잘 자요", "jal jayo",
          "JAL-JA: sleep well, jazz lullaby.", None, "audio/greetings/jal-jayo.mp3"),
    _item("ko-gre-thanks", "thank you", "감사합니다", "gamsahamnida",
          "GAHM-sah: come, sir, accept my thanks.", "도와주셔서 감사합니다.",
          "audio/greetings/gamsahamnida.mp3"),
    _item("ko-gre-welcome", "you're welcome", "천만에요", "cheonmaneyo",
          "CHEON-man: 'a thousand times, no trouble.'", None,
          "audio/greetings/cheonmaneyo.mp3"),
    _item("ko-gre-excuseme", "excuse me", "실례합니다", "sillyehamnida",
          "SILL-yeh: stepping over the sill, excuse me.", None,
          "audio/greetings/sillyehamnida.mp3"),
    _item("ko-gre-sorry", "I'm sorry", "죄송합니다", "joesonghamnida",
          "JWEH-song: a sorry song.", None, "audio/greetings/joesonghamnida.mp3"),
]

_KO_INTRODUCING = [
    _item("ko-intro-name", "my name is Minsu", "제 이름은 민수입니다", "je ireumeun Minsu-imnida",
          "JE ireum: 'jay, a room' with my name on the door.", "제 이름은 민수입니다."),
    _item("ko-intro-nice", "nice to meet you", "만나서 반갑습니다", "mannaseo bangapseumnida",
          "Man, a sir! Bang! Glad we met."),
    _item("ko-intro-student", "I am a student", "저는 학생입니다", "jeoneun haksaeng-imnida",
          "HAK-saeng: a hawk sang at school."),
    _item("ko-intro-from", "I am from the Philippines", "저는 필리핀에서 왔습니다",
          "jeoneun pillipin-eseo wassseumnida", None),
    _item("ko-intro-age-q", "how old are you?", "몇 살이에요?", "myeot sarieyo",
          "MYEOT sal: how many candles?"),
    _item("ko-intro-age-a", "I am twenty years old", "저는 스무 살입니다", "jeoneun seumu sarimnida",
          "SEU-mu: smooth twenty."),
    _item("ko-intro-job", "what is your job?", "직업이 뭐예요?", "jigeobi mwoyeyo",
          "JIG-eob: what gig do you do?"),
    _item("ko-intro-regards", "please take care of me", "잘 부탁드립니다", "jal butakdeurimnida",
          "JAL boo-TAK: tacked together, we'll get along."),
]

_KO_PHONE = [
    _item("ko-pho-hello", "hello (on the phone)", "여보세요", "yeoboseyo",
          "YEO-bo-se-yo: yo, bose earphones on, hello?", "여보세요, 누구세요?"),
    _item("ko-pho-who", "who is calling?", "누구세요?", "nuguseyo",
          "NEW GOO, say yo: who's there?"),
    _item("ko-pho-moment", "one moment please", "잠시만요", "jamsimanyo",
          "JAM-si: jam the clock for a moment."),
    _item("ko-pho-wrong", "you have the wrong number", "전화 잘못 거셨어요", "jeonhwa jalmot geosyeosseoyo",
          None),
    _item("ko-pho-callback", "I will call again", "다시 전화할게요", "dasi jeonhwahalgeyo",
          "DA-si: dash, I'll dial again."),
    _item("ko-pho-message", "please leave a message", "메시지를 남겨 주세요", "mesijireul namgyeo juseyo",
          None),
    _item("ko-pho-busy", "the line is busy", "통화 중이에요", "tonghwa jung-ieyo",
          "TONG-hwa jung: the tone says busy."),
    _item("ko-pho-later", "please call later", "나중에 전화해 주세요", "najunge jeonhwahae juseyo",
          "NA-jung: not now, June, later."),
]

_KO_STREET = [
    _item("ko-str-road", "street / road", "길", "gil", "A GILl of asphalt running through town."),
    _item("ko-str-busstop", "bus stop", "버스 정류장", "beoseu jeongnyujang",
          "Bus plus jeongnyujang (stop yard)."),
    _item("ko-str-subway", "subway station", "지하철역", "jihacheollyeok",
          "JI-ha: G below ha! Underground rail."),
    _item("ko-str-crosswalk", "crosswalk", "횡단보도", "hoengdanbodo",
          "HOENG-dan: hang on, then cross."),
    _item("ko-str-left", "go left", "왼쪽으로 가세요", "oenjjogeuro gaseyo",
          "OEN-jjok: wrenched to the left.", "왼쪽으로 가세요, 약국이 있어요."),
    _item("ko-str-right", "go right", "오른쪽으로 가세요", "oreunjjogeuro gaseyo",
          "O-reun: all right, go right."),
    _item("ko-str-straight", "go straight", "곧장 가세요", "gotjang gaseyo",
          "GOT-jang: got to go straight."),
    _item("ko-str-where", "where am I?", "여기가 어디예요?", "yeogiga eodiyeyo",
          "YEO-gi: yo, gee, where is here?"),
]

_KO_EATING = [
    _item("ko-eat-delicious", "it's delicious", "맛있어요", "masisseoyo",
          "MA-shi-sso: mashed, so delicious.", "이 김치는 정말 맛있어요."),
    _item("ko-eat-water", "water, please", "물 주세요", "mul juseyo",
          "MOOL: a mule carries the water. Juseyo asks please."),
    _item("ko-eat-menu", "the menu, please", "메뉴 주세요", "menyu juseyo",
          "Menu plus juseyo (please give)."),
    _item("ko-eat-bill", "the check, please", "계산서 주세요", "gyesanseo juseyo",
          "GYE-san: pay, son! The bill arrives."),
    _item("ko-eat-hungry", "I'm hungry", "배고파요", "baegopayo",
          "BAE-go-pa: my belly's gone past empty."),
    _item("ko-eat-before", "said before a meal (I will eat well)", "잘 먹겠습니다",
          "jal meokgesseumnida", "JAL meok: I shall munch well."),
    _item("ko-eat-after", "said after a meal (I ate well)", "잘 먹었습니다",
          "jal meogeosseumnida", "Past tense munching: I ate well."),
    _item("ko-eat-notspicy", "not spicy, please", "맵지 않게 해 주세요", "maepji anke hae juseyo",
          "MAEP-ji: map out a mild route, please."),
]


def korean_canonical_pack() -> LexiconPack:
    """The bundled canonical Korean pack (full curriculum, 96 items)."""
    return LexiconPack(
        pack_id="ko-canonical-1",
        pack_version="1.0.0",
        language=Language.KOREAN,
        levels=(
            Level(
                rank=LevelRank.BASIC,
                categories=(
                    _cat("alphabet", _KO_ALPHABET),
                    _cat("numbering", _KO_NUMBERING),
                ),
            ),
            Level(
                rank=LevelRank.INTERMEDIATE,
                categories=(
                    _cat("pronouns", _KO_PRONOUNS),
                    _cat("interrogatives", _KO_INTERROGATIVES),
                    _cat("school-supplies", _KO_SCHOOL),
                    _cat("sports", _KO_SPORTS),
                    _cat("time-reading", _KO_TIME),
                ),
            ),
            Level(
                rank=LevelRank.ADVANCED,
                categories=(
                    _cat("greetings", _KO_GREETINGS),
                    _cat("introducing-oneself", _KO_INTRODUCING),
                    _cat("phone-conversation", _KO_PHONE),
                    _cat("street", _KO_STREET),
                    _cat("eating", _KO_EATING),
                ),
            ),
        ),
    )


def spanish_minimal_pack() -> LexiconPack:
    """The smallest legal pack: three levels, one category and item each."""
    return LexiconPack(
        pack_id="es-minimal-1",
        pack_version="1.0.0",
        language=Language.SPANISH,
        levels=(
            Level(
                rank=LevelRank.BASIC,
                categories=(_cat("numbers", [_item("es-num-1", "one", "uno", "oo-no")]),),
            ),
            Level(
                rank=LevelRank.INTERMEDIATE,
                categories=(_cat("pronouns", [_item("es-pro-i", "I", "yo", "yoh")]),),
            ),
            Level(
                rank=LevelRank.ADVANCED,
                categories=(_cat("greetings", [_item("es-gre-hello", "hello", "hola", "oh-la")]),),
            ),
        ),
    )


BUNDLED_PACKS = {
    "ko-canonical-1": korean_canonical_pack,
    "es-minimal-1": spanish_minimal_pack,
}
